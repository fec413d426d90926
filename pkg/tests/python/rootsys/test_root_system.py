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
from unipotent_lifts.rootsys import (
    build_root_system,
    cartan_matrix,
    coxeter_number,
    is_good_prime,
    is_torsion_prime,
)

CASES = {
    ("A", 1): (1, 2, (1,)),
    ("A", 4): (10, 5, (1, 1, 1, 1)),
    ("B", 2): (4, 4, (1, 2)),
    ("B", 3): (9, 6, (1, 2, 2)),
    ("C", 3): (9, 6, (2, 2, 1)),
    ("D", 4): (12, 6, (1, 2, 1, 1)),
    ("E", 6): (36, 12, (1, 2, 2, 3, 2, 1)),
    ("E", 7): (63, 18, (2, 2, 3, 4, 3, 2, 1)),
    ("E", 8): (120, 30, (2, 3, 4, 6, 5, 4, 3, 2)),
    ("F", 4): (24, 12, (2, 3, 4, 2)),
    ("G", 2): (6, 6, (3, 2)),
}


def test_positive_roots(subtests):
    for (family, rank), (count, coxeter, highest) in CASES.items():
        with subtests.test(family=family, rank=rank):
            rs = build_root_system(family, rank)
            assert rs.num_positive_roots == count
            assert coxeter_number(rs) == coxeter
            assert rs.highest_root == highest
            assert set(rs.simple_roots) == set(rs.positive_roots[:rank])


def test_root_order():
    rs = build_root_system("A", 2)
    assert rs.positive_roots == ((0, 1), (1, 0), (1, 1))
    assert rs.label == "A2"
    assert rs.is_root((-1, -1))
    assert not rs.is_root((1, -1))
    assert rs.to_json() == {"family": "A", "rank": 2}


def test_cartan_matrix():
    assert cartan_matrix("G", 2).tolist() == [[2, -1], [-3, 2]]
    b3 = cartan_matrix("B", 3)
    assert b3[1, 2] == -2
    assert b3[2, 1] == -1
    assert np.array_equal(cartan_matrix("C", 3), b3.T)


def test_invalid(subtests):
    for family, rank in [("H", 3), ("D", 3), ("E", 9), ("F", 3), ("G", 3), ("B", 1), ("A", 0)]:
        with subtests.test(family=family, rank=rank), pytest.raises(ValueError):
            build_root_system(family, rank)


def test_lowercase_family():
    assert build_root_system("e", 6) == build_root_system("E", 6)


def test_good_primes(subtests):
    table = {
        ("A", 3): [],
        ("B", 3): [2],
        ("C", 2): [2],
        ("D", 4): [2],
        ("E", 6): [2, 3],
        ("E", 7): [2, 3],
        ("E", 8): [2, 3, 5],
        ("F", 4): [2, 3],
        ("G", 2): [2, 3],
    }
    for (family, rank), bad in table.items():
        rs = build_root_system(family, rank)
        with subtests.test(family=family, rank=rank):
            assert [p for p in [2, 3, 5, 7] if not is_good_prime(rs, p)] == bad


def test_torsion_primes(subtests):
    table = {
        ("A", 3): [],
        ("B", 2): [],
        ("B", 3): [2],
        ("C", 3): [],
        ("D", 4): [2],
        ("E", 8): [2, 3, 5],
        ("F", 4): [2, 3],
        ("G", 2): [2],
    }
    for (family, rank), torsion in table.items():
        rs = build_root_system(family, rank)
        with subtests.test(family=family, rank=rank):
            assert [p for p in [2, 3, 5, 7] if is_torsion_prime(rs, p)] == torsion
