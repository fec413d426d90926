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

"""Exception types and exit codes."""

from __future__ import annotations

from enum import IntEnum
from typing import Any


class ExitCode(IntEnum):
    """Process exit codes of the command-line interface."""

    SUCCESS = 0
    """The command completed successfully."""

    DOMAIN_ERROR = 1
    """The input was understood but violates a mathematical precondition."""

    USAGE_ERROR = 2
    """The command line itself was malformed."""


class UnipotentLiftsError(Exception):
    """Base class of every domain error raised by this package."""


class ContextError(UnipotentLiftsError):
    """Operands live in incompatible contexts (moduli, rings, heights or groups)."""


class UnsupportedRegimeError(UnipotentLiftsError):
    """A hypothesis of the theory is violated.

    Args:
        hypothesis: a short statement of the violated hypothesis.
        detail: the offending data.
    """

    def __init__(self, hypothesis: str, detail: str = "") -> None:
        self.hypothesis = hypothesis
        self.detail = detail
        message = f"unsupported regime: requires {hypothesis}"
        if detail:
            message += f" ({detail})"
        super().__init__(message)


class InvalidMorphismError(UnipotentLiftsError):
    """A candidate comorphism is not a homomorphism of Hopf algebras."""

    def __init__(self, message: str, generator: Any = None) -> None:
        self.generator = generator
        super().__init__(message)


class ConstantTermError(InvalidMorphismError):
    """A generator image has a nonzero constant term (counit incompatibility)."""


class HopfConditionError(InvalidMorphismError):
    """Comultiplication is not preserved on a generator.

    Args:
        generator: the generator on which the identity fails.
        difference: ``comultiply(image) - (images ⊗ images)(Δ(generator))``.
    """

    def __init__(self, generator: Any, difference: Any) -> None:
        self.difference = difference
        super().__init__(
            f"comultiplication not preserved on {generator}: difference {difference}",
            generator,
        )


class NormalizationError(UnipotentLiftsError):
    """A conjugation does not preserve U (or its result does not factor through U)."""


class NonCommutingError(UnipotentLiftsError):
    """Matrices that must commute pairwise do not."""


class NotInImageError(UnipotentLiftsError):
    """A one-parameter subgroup is not of the form ``exp_{x_0} exp_{x_1}^{(1)} ⋯``.

    Args:
        entry: the matrix entry ``(row, col)`` (0-based) carrying the offending term.
        degree: the offending exponent of the parameter.
    """

    def __init__(self, entry: tuple[int, int], degree: int) -> None:
        self.entry = entry
        self.degree = degree
        where = f"entry ({entry[0] + 1}, {entry[1] + 1})"
        if degree == 0:
            super().__init__(f"{where} has a constant term off the identity")
        else:
            super().__init__(
                f"{where} has a term of degree {degree} which is not a multiple of p after "
                "removing the tangent factor"
            )


class BudgetExceededError(UnipotentLiftsError):
    """An enumeration would inspect more candidates than allowed.

    Args:
        required: the number of candidates the enumeration needs.
        budget: the configured budget.
    """

    def __init__(self, required: int, budget: int) -> None:
        self.required = required
        self.budget = budget
        super().__init__(f"enumeration needs {required} candidates, budget is {budget}")


class InternalInvariantError(UnipotentLiftsError):
    """A proven property failed to hold. This always indicates a bug in this package."""
