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
from unipotent_lifts.arith import Poly, RingMatrix, TruncatedPoly
from unipotent_lifts.exceptions import NonCommutingError, UnsupportedRegimeError
from unipotent_lifts.exponential import (
    GeneralLinearSubgroup,
    NilpotentMatrix,
    exp_matrix,
    general_linear_subgroup,
    random_commuting_nilpotents,
)
from unipotent_lifts.morphisms import InfinitesimalSubgroup, OneParamSubgroup
from unipotent_lifts.unipotent import make_group

LOWER = NilpotentMatrix([[0, 0, 0], [1, 0, 0], [0, 1, 0]], 5)


def _exponential(xs, r=None):
    """The product of exp(t^(p^i) x_i), untruncated or in k[t]/(t^(p^r))."""
    p, n = xs[0].p, xs[0].n
    one = Poly.one(p) if r is None else TruncatedPoly.one(p, r)
    product = RingMatrix.identity(n, one)
    for i, x in enumerate(xs):
        scalar = Poly.monomial(p**i, p) if r is None else TruncatedPoly.monomial(p**i, p, r)
        product = product @ exp_matrix(x, scalar)
    return product


def test_lower_triangular(subtests):
    with subtests.test("global"):
        gl = general_linear_subgroup([LOWER])
        assert isinstance(gl.subgroup, OneParamSubgroup)
        assert gl.height is None
        assert gl.subgroup.group == make_group([1, 1, 1], 5)
        assert gl.to_matrix() == _exponential([LOWER])
        assert str(gl.to_matrix()[2, 0]) == "3*t^2"
        assert gl.extract() == [LOWER]

    with subtests.test("infinitesimal"):
        gl = general_linear_subgroup([LOWER], r=2)
        assert isinstance(gl.subgroup, InfinitesimalSubgroup)
        assert gl.height == 2
        assert gl.to_matrix() == _exponential([LOWER], r=2)
        assert gl.extract() == [LOWER, NilpotentMatrix.zero(3, 5)]


def test_random_round_trips(subtests):
    rng = np.random.default_rng(42)
    for n, p, count in [(3, 5, 2), (4, 5, 2), (3, 7, 3)]:
        with subtests.test(n=n, p=p, count=count):
            for _ in range(5):
                xs = random_commuting_nilpotents(n, p, count, rng)
                gl = general_linear_subgroup(xs)
                assert gl.to_matrix() == _exponential(xs)
                assert gl.extract(r=count) == xs
                infinitesimal = general_linear_subgroup(xs, r=count)
                assert infinitesimal.to_matrix() == _exponential(xs, r=count)
                assert infinitesimal.extract() == xs


def test_empty(subtests):
    with subtests.test("trivial"):
        gl = general_linear_subgroup([], n=3, p=5)
        assert gl.subgroup.is_trivial()
        assert gl.to_matrix() == RingMatrix.identity(3, Poly.one(5))
        assert gl.extract() == []
        assert gl.extract(r=2) == [NilpotentMatrix.zero(3, 5)] * 2

    with subtests.test("size required"), pytest.raises(ValueError):
        general_linear_subgroup([])


def test_invalid(subtests):
    with subtests.test("non-commuting"), pytest.raises(NonCommutingError):
        general_linear_subgroup([LOWER, NilpotentMatrix([[0, 1, 0], [0, 0, 0], [0, 0, 0]], 5)])

    with subtests.test("larger than p"), pytest.raises(UnsupportedRegimeError):
        jordan = np.eye(4, k=-1, dtype=np.int64)
        general_linear_subgroup([NilpotentMatrix.from_array(jordan, 3)])

    with subtests.test("longer than the height"), pytest.raises(ValueError):
        general_linear_subgroup([LOWER, LOWER], r=1)

    gl = general_linear_subgroup([LOWER])

    with subtests.test("singular flag"), pytest.raises(ValueError):
        GeneralLinearSubgroup(((1, 0, 0), (0, 0, 0), (0, 0, 1)), gl.subgroup)

    with subtests.test("not the unitriangular group"):
        coarse = OneParamSubgroup(make_group([2, 1], 5), {"Y_1_3": [0, 1], "Y_2_3": [0, 1]})
        with pytest.raises(ValueError, match="unitriangular"):
            GeneralLinearSubgroup(gl.flag, coarse)


def test_json(subtests):
    gl = general_linear_subgroup([LOWER], r=1)
    data = gl.to_json()

    with subtests.test("format"):
        assert data["p"] == 5
        assert data["n"] == 3
        assert len(data["flag"]) == 9
        assert data["morphism"]["r"] == 1
        assert data["matrix"][0] == [1]
        assert data["matrix"][3] == [0, 1]

    with subtests.test("round trip"):
        assert GeneralLinearSubgroup.from_json(data) == gl

    with subtests.test("malformed"), pytest.raises(ValueError):
        GeneralLinearSubgroup.from_json({"p": 5, "n": 3, "flag": [1, 0, 0]})
