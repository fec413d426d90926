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
from unipotent_lifts.exponential import NilpotentMatrix
from unipotent_lifts.oracle import (
    OracleConfig,
    certify_surjectivity,
    enumerate_commuting_tuples,
    verify_bijection,
    verify_classical_agreement,
    verify_commutation_equivalence,
    verify_equivariance,
    verify_generator_independence,
    verify_lift_properties,
)
from unipotent_lifts.unipotent import make_group

HEISENBERG_3 = make_group([1, 1, 1], 3)


def test_enumerate_commuting_tuples(subtests):
    with subtests.test("two blocks of one"):
        assert len(enumerate_commuting_tuples(make_group([1, 1], 3), 2)) == 9

    with subtests.test("abelian"):
        assert len(enumerate_commuting_tuples(make_group([2, 1], 3), 2)) == 81

    with subtests.test("heisenberg"):
        tuples = enumerate_commuting_tuples(HEISENBERG_3, 2)
        assert len(tuples) == 297
        assert all(t.is_zero() for t in tuples[0])
        assert len(set(tuples)) == 297

    with subtests.test("empty tuple"):
        assert [len(t) for t in enumerate_commuting_tuples(HEISENBERG_3, 0)] == [0]

    with subtests.test("lexicographic"):
        first, second = enumerate_commuting_tuples(make_group([1, 1], 5), 1)[:2]
        assert first[0] == NilpotentMatrix.zero(2, 5)
        assert second[0] == NilpotentMatrix([[0, 1], [0, 0]], 5)

    with subtests.test("budget"), pytest.raises(BudgetExceededError):
        enumerate_commuting_tuples(HEISENBERG_3, 2, OracleConfig(budget=100))


def test_bijection(subtests):
    with subtests.test("heisenberg"):
        report = verify_bijection(HEISENBERG_3, 2, OracleConfig(pair_samples=20, seed=3))
        assert report.ok
        assert report.instance == {"blocks": [1, 1, 1], "p": 3, "r": 2}
        assert report.seed == 3
        for name in ("tuples", "lifts_restrict", "round_trips", "distinct_morphisms"):
            assert report.counts[name] == 297
        assert report.counts["pairs"] == 20

    with subtests.test("workers"):
        report = verify_bijection(make_group([2, 1], 3), 1, OracleConfig(workers=2))
        assert report.ok
        assert report.counts["round_trips"] == 9


def test_surjectivity(subtests):
    with subtests.test("heisenberg"):
        report = certify_surjectivity(HEISENBERG_3, 1)
        assert report.ok
        assert report.counts == {"tuples": 27, "morphisms": 27, "distinct_images": 27}

    with subtests.test("abelian"):
        report = certify_surjectivity(make_group([2, 1], 3), 2)
        assert report.ok
        assert report.counts["morphisms"] == 81


def test_commutation(subtests):
    with subtests.test("exhaustive"):
        report = verify_commutation_equivalence(HEISENBERG_3, 1, exhaustive=True)
        assert report.ok
        assert report.counts == {"pairs": 378, "commuting_pairs": 162}

    with subtests.test("sampled"):
        config = OracleConfig(pair_samples=20, seed=9)
        report = verify_commutation_equivalence(make_group([1, 1, 1], 5), 2, config)
        assert report.ok
        assert report.counts["pairs"] == 20
        assert report.counts["commuting_pairs"] >= 10


def test_lift_properties():
    report = verify_lift_properties(
        [[1, 1, 1], [2, 1], [1, 1, 1, 1]], [3, 5], [1, 2], OracleConfig(seed=5), samples=2
    )
    assert report.ok
    assert report.counts == {
        "skipped_instances": 2,
        "morphisms": 20,
        "degree_bound": 20,
        "restrictions": 20,
    }
    expected = {"blocks": [[1, 1, 1], [2, 1], [1, 1, 1, 1]], "p": [3, 5], "r": [1, 2]}
    assert report.instance == expected


def test_equivariance():
    report = verify_equivariance(make_group([1, 1, 1], 5), 1, OracleConfig(pair_samples=12))
    assert report.ok
    for kind in ("diagonal", "unitriangular", "block_upper"):
        assert report.counts[kind] == 3
    assert report.counts["permutation"] == 3
    assert "skipped" not in report.counts


def test_equivariance_beyond_the_borel():
    config = OracleConfig(pair_samples=8, seed=11)
    report = verify_equivariance(make_group([1, 2, 1], 5), 1, config)
    assert report.ok
    assert report.counts == {
        "diagonal": 2,
        "unitriangular": 2,
        "block_upper": 2,
        "permutation": 2,
    }


def test_generator_independence():
    config = OracleConfig(pair_samples=10, seed=1)
    report = verify_generator_independence(make_group([1, 2, 1], 5), 2, config)
    assert report.ok
    assert report.counts == {"changes": 10}


def test_classical(subtests):
    with subtests.test("heisenberg"):
        report = verify_classical_agreement(make_group([1, 1, 1], 5))
        assert report.ok
        assert report.counts == {"elements": 125}
        assert report.instance["r"] == 1

    with subtests.test("budget"), pytest.raises(BudgetExceededError):
        verify_classical_agreement(make_group([1, 1, 1], 5), OracleConfig(budget=124))
