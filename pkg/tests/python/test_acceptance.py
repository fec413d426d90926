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

import numpy as np
import pytest
from unipotent_lifts.arith import inverse_mod, is_strictly_upper, matmul_mod
from unipotent_lifts.exponential import engel_flag, random_commuting_nilpotents
from unipotent_lifts.oracle import (
    OracleConfig,
    certify_surjectivity,
    verify_bijection,
    verify_classical_agreement,
    verify_commutation_equivalence,
    verify_equivariance,
    verify_generator_independence,
    verify_lift_properties,
)
from unipotent_lifts.unipotent import make_group

pytestmark = pytest.mark.slow

HEISENBERG_5 = make_group([1, 1, 1], 5)


def test_lift_correctness_and_degree_bound():
    groups = [[1, 1, 1], [2, 1], [1, 2, 1], [1, 1, 1, 1]]
    report = verify_lift_properties(groups, [5, 7], [1, 2], OracleConfig(seed=2026), samples=32)
    assert report.ok
    assert report.counts.get("skipped_instances", 0) == 0
    assert report.counts["morphisms"] == 512
    assert report.counts["degree_bound"] == 512
    assert report.counts["restrictions"] == 512


def test_generator_change_independence():
    config = OracleConfig(pair_samples=50, seed=2026)
    report = verify_generator_independence(HEISENBERG_5, 2, config)
    assert report.ok
    assert report.counts == {"changes": 50}


def test_commutation_equivalence():
    report = verify_commutation_equivalence(HEISENBERG_5, 1, exhaustive=True)
    assert report.ok
    assert report.counts["pairs"] == 125 * 126 // 2


def test_equivariance():
    report = verify_equivariance(HEISENBERG_5, 2, OracleConfig(pair_samples=200, seed=2026))
    assert report.ok
    for kind in ("diagonal", "unitriangular", "block_upper", "permutation"):
        assert report.counts[kind] == 50
    assert sum(report.counts.values()) == 200


def test_bijection(subtests):
    for blocks, p, r in [([1, 1, 1], 5, 2), ([2, 1], 3, 3), ([1, 1, 1, 1], 5, 1)]:
        with subtests.test(blocks=blocks, p=p, r=r):
            report = verify_bijection(make_group(blocks, p), r, OracleConfig(seed=2026))
            assert report.ok
            assert report.counts["round_trips"] == report.counts["tuples"]
            assert report.counts["distinct_morphisms"] == report.counts["tuples"]


def test_surjectivity(subtests):
    cases = [([1, 1], 3, r) for r in (1, 2, 3)]
    cases += [([2, 1], 3, r) for r in (1, 2)]
    cases.append(([1, 1, 1], 3, 2))
    for blocks, p, r in cases:
        with subtests.test(blocks=blocks, p=p, r=r):
            report = certify_surjectivity(make_group(blocks, p), r)
            assert report.ok
            assert report.counts["tuples"] == report.counts["morphisms"]


def test_classical_agreement():
    report = verify_classical_agreement(HEISENBERG_5)
    assert report.ok
    assert report.counts == {"elements": 125}


def test_engel_flag(subtests):
    rng = np.random.default_rng(2026)
    for n, p in [(3, 5), (4, 5), (3, 7), (4, 7)]:
        with subtests.test(n=n, p=p):
            for _ in range(50):
                xs = random_commuting_nilpotents(n, p, 2, rng)
                g = engel_flag(xs)
                g_inv = inverse_mod(g, p)
                for x in xs:
                    assert is_strictly_upper(matmul_mod(matmul_mod(g, x.array, p), g_inv, p))
