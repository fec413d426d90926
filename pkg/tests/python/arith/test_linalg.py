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
from hypothesis import given
from hypothesis import strategies as st
from unipotent_lifts.arith import (
    Poly,
    RingMatrix,
    as_matrix_mod,
    bracket_mod,
    inverse_mod,
    is_nilpotent_mod,
    is_strictly_upper,
    matmul_mod,
    matpow_mod,
    nullspace_mod,
)


def test_as_matrix_mod():
    assert as_matrix_mod([[-1, 7], [5, 2]], 5).tolist() == [[4, 2], [0, 2]]
    with pytest.raises(ValueError):
        as_matrix_mod([[1, 2, 3]], 5)


def test_inverse_mod():
    assert inverse_mod(np.array([[1, 2], [0, 1]]), 5).tolist() == [[1, 3], [0, 1]]
    with pytest.raises(ValueError):
        inverse_mod(np.array([[1, 1], [1, 1]]), 5)
    with pytest.raises(ValueError):
        inverse_mod(np.array([[1, 2], [1, 7]]), 5)


def test_matpow_mod():
    a = np.array([[1, 1], [0, 1]])
    assert matpow_mod(a, 5, 5).tolist() == [[1, 0], [0, 1]]
    assert matpow_mod(a, 0, 5).tolist() == [[1, 0], [0, 1]]


def test_nilpotence(subtests):
    with subtests.test("upper"):
        assert is_nilpotent_mod(np.array([[0, 1], [0, 0]]), 5)

    with subtests.test("idempotent"):
        assert not is_nilpotent_mod(np.array([[1, 0], [0, 0]]), 5)

    with subtests.test("not triangular"):
        a = np.array([[1, 1], [4, 4]])
        assert is_nilpotent_mod(a, 5)
        assert not is_strictly_upper(a)


def test_bracket_mod():
    e12 = np.array([[0, 1, 0], [0, 0, 0], [0, 0, 0]])
    e23 = np.array([[0, 0, 0], [0, 0, 1], [0, 0, 0]])
    assert bracket_mod(e12, e23, 3).tolist() == [[0, 0, 1], [0, 0, 0], [0, 0, 0]]
    assert bracket_mod(e23, e12, 3)[0, 2] == 2


def test_nullspace_mod(subtests):
    with subtests.test("reduced basis"):
        assert nullspace_mod(np.array([[1, 1]]), 5).tolist() == [[4, 1]]

    with subtests.test("full rank"):
        assert nullspace_mod(np.eye(3, dtype=np.int64), 7).shape == (0, 3)

    with subtests.test("no rows"):
        assert nullspace_mod(np.zeros((0, 2), dtype=np.int64), 3).tolist() == [[1, 0], [0, 1]]


@given(
    entries=st.lists(st.integers(min_value=0, max_value=6), min_size=12, max_size=12),
)
def test_nullspace_is_kernel(entries):
    a = np.array(entries, dtype=np.int64).reshape(3, 4)
    kernel = nullspace_mod(a, 7)
    assert not matmul_mod(a, kernel.T, 7).any()
    assert kernel.shape[0] >= 1


@given(entries=st.lists(st.integers(min_value=0, max_value=4), min_size=3, max_size=3))
def test_unitriangular_inverse(entries):
    a = np.array([[1, entries[0], entries[1]], [0, 1, entries[2]], [0, 0, 1]])
    assert matmul_mod(a, inverse_mod(a, 5), 5).tolist() == np.eye(3, dtype=int).tolist()


def test_ring_matrix():
    t = Poly([0, 1], 5)
    one = Poly.one(5)
    m = RingMatrix.from_array([[0, 1], [0, 0]], t) + RingMatrix.identity(2, one)
    assert (m @ m)[0, 1] == 2 * t
    assert (m - m) == RingMatrix.from_array([[0, 0], [0, 0]], one)
    assert (-m)[0, 0] == Poly([4], 5)
    assert (m * 2)[0, 1] == 2 * t
    assert m.map(lambda entry: entry(1))[0, 1] == 1
    assert [(i, j) for i, j, _ in m.entries()] == [(0, 0), (0, 1), (1, 0), (1, 1)]
    with pytest.raises(ValueError):
        RingMatrix([[one, one]])
    with pytest.raises(ValueError):
        m @ RingMatrix.identity(3, one)
