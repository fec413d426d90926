# This code is part of unipotent-lifts.
#
# (C) Copyright the unipotent-lifts developers 2026.
#
# This code is licensed under the Apache License, Version 2.0. You may
# obtain a copy of this license in the LICENSE.txt file in the root directory
# of this source tree or at https://www.apache.org/licenses/LICENSE-2.0.
#
# Any modifications or derivative works of this code must retain this
# copyright notice, and modified files need to carry a notice indicating
# that they have been altered from the originals.


"""Runtime knobs of the enumeration engines."""

from __future__ import annotations

from dataclasses import dataclass, replace
from typing import Any

import numpy as np

from ..exceptions import BudgetExceededError

DEFAULT_BUDGET = 10**7


@dataclass(frozen=True)
class OracleConfig:
    """Configuration shared by all oracle engines.

    Args:
        budget: the largest number of candidates an exhaustive enumeration may inspect.
        seed: the seed of every random choice; recorded in the reports.
        pair_samples: the number of pairs (or elements) drawn by randomized checks.
        workers: the number of worker processes; ``1`` runs in-process.
    """

    budget: int = DEFAULT_BUDGET
    seed: int = 0
    pair_samples: int = 200
    workers: int = 1

    def __post_init__(self) -> None:
        if self.budget < 1:
            raise ValueError(f"the budget must be positive, got {self.budget}")
        if self.pair_samples < 0:
            raise ValueError(f"the sample count must be non-negative, got {self.pair_samples}")
        if self.workers < 1:
            raise ValueError(f"the worker count must be positive, got {self.workers}")

    def rng(self) -> np.random.Generator:
        """A fresh generator seeded with :attr:`seed`."""
        return np.random.default_rng(self.seed)

    def check_budget(self, required: int) -> None:
        """Raises :class:`.BudgetExceededError` if ``required`` exceeds the budget."""
        if required > self.budget:
            raise BudgetExceededError(required, self.budget)

    def with_overrides(self, **kwargs: Any) -> OracleConfig:
        """Returns a copy with the non-``None`` keyword arguments replaced."""
        return replace(self, **{k: v for k, v in kwargs.items() if v is not None})
