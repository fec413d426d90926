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

import pytest
from unipotent_lifts.exceptions import BudgetExceededError
from unipotent_lifts.oracle import OracleConfig


def test_defaults():
    config = OracleConfig()
    assert config.budget == 10**7
    assert config.seed == 0
    assert config.pair_samples == 200
    assert config.workers == 1


def test_validation(subtests):
    with subtests.test("budget"), pytest.raises(ValueError):
        OracleConfig(budget=0)

    with subtests.test("samples"), pytest.raises(ValueError):
        OracleConfig(pair_samples=-1)

    with subtests.test("workers"), pytest.raises(ValueError):
        OracleConfig(workers=0)


def test_overrides():
    config = OracleConfig().with_overrides(budget=100, seed=None, workers=2)
    assert config == OracleConfig(budget=100, workers=2)
    with pytest.raises(ValueError):
        config.with_overrides(workers=-1)


def test_budget():
    config = OracleConfig(budget=100)
    config.check_budget(100)
    with pytest.raises(BudgetExceededError) as info:
        config.check_budget(101)
    assert (info.value.required, info.value.budget) == (101, 100)


def test_rng():
    config = OracleConfig(seed=17)
    first, second = config.rng(), config.rng()
    assert first.integers(1000, size=5).tolist() == second.integers(1000, size=5).tolist()
