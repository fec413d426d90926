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
from unipotent_lifts.exponential import (
    central_generators,
    random_commuting_nilpotents,
    random_commuting_tuple,
    random_lie_element,
)
from unipotent_lifts.morphisms.library import commute_pairwise
from unipotent_lifts.unipotent import Y, make_group


def test_central_generators(subtests):
    with subtests.test("heisenberg"):
        assert central_generators(make_group([1, 1, 1], 5)) == [Y(1, 3)]

    with subtests.test("two blocks"):
        grp = make_group([2, 1], 3)
        assert central_generators(grp) == list(grp.generators)

    with subtests.test("three blocks"):
        assert sorted(central_generators(make_group([1, 2, 1], 3))) == [Y(1, 4)]


def test_random_lie_element():
    rng = np.random.default_rng(5)
    grp = make_group([1, 2, 1], 3)
    for _ in range(10):
        assert random_lie_element(grp, rng).lies_in(grp)


def test_random_commuting_tuple(subtests):
    rng = np.random.default_rng(8)
    for blocks, p, r in [([1, 1, 1], 5, 3), ([2, 1, 1], 3, 2), ([1, 1, 1, 1], 5, 4)]:
        grp = make_group(blocks, p)
        with subtests.test(blocks=blocks, p=p, r=r):
            for _ in range(10):
                tup = random_commuting_tuple(grp, r, rng)
                assert len(tup) == r
                assert all(x.lies_in(grp) for x in tup)
                assert commute_pairwise(tup.entries) is None

    with subtests.test("empty"):
        assert len(random_commuting_tuple(make_group([1, 1], 3), 0, rng)) == 0

    with subtests.test("negative"), pytest.raises(ValueError):
        random_commuting_tuple(make_group([1, 1], 3), -1, rng)


def test_random_commuting_nilpotents():
    rng = np.random.default_rng(13)
    xs = random_commuting_nilpotents(4, 5, 3, rng)
    assert len(xs) == 3
    assert all(x.n == 4 and x.p == 5 for x in xs)
    assert commute_pairwise(xs) is None
