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

from abc import ABC, abstractmethod

import pytest
from hypothesis import given
from hypothesis import strategies as st
from unipotent_lifts.arith import (
    Fp,
    Poly,
    TruncatedPoly,
    canonical_lift,
    poly_mul,
    substitute_frobenius,
    truncate,
)
from unipotent_lifts.exceptions import ContextError

coefficients = st.lists(st.integers(min_value=0, max_value=10), max_size=12)


class DensePolynomialTests(ABC):
    p = 5

    @abstractmethod
    def make(self, coeffs) -> Poly | TruncatedPoly: ...

    def test_normalization(self):
        a = self.make([6, -1, 0, 0])
        assert a.coeffs == (1, 4)
        assert a.degree == 1
        assert self.make([5, 10]).is_zero()
        assert self.make([]).degree == -1

    def test_accessors(self, subtests):
        a = self.make([0, 0, 3, 0, 1])

        with subtests.test("coefficient"):
            assert a.coefficient(2) == Fp(3, 5)
            assert a[7] == 0

        with subtests.test("support"):
            assert a.support() == [2, 4]

        with subtests.test("order"):
            assert a.order() == 2
            assert self.make([]).order() == -1

    def test_ring_operations(self):
        a = self.make([2, 3])
        b = self.make([4, 1])
        assert a * b == self.make([3, 4, 3])
        assert a + b == self.make([1, 4])
        assert a - a == self.make([])
        assert 3 * a == self.make([1, 4])
        assert -a == self.make([3, 2])

    def test_frobenius_power(self):
        assert self.make([1, 1]) ** 5 == self.make([1, 0, 0, 0, 0, 1])

    def test_evaluate(self):
        a = self.make([1, 1])
        assert a(4) == 0
        assert a(Fp(3, 5)) == 4

    def test_str(self):
        assert str(self.make([1, 0, 2, 1])) == "1 + 2*t^2 + t^3"
        assert str(self.make([])) == "0"

    def test_bad_coefficients(self):
        with pytest.raises(TypeError):
            self.make([0.5])
        with pytest.raises(ContextError):
            self.make([Fp(1, 7)])


class TestPoly(DensePolynomialTests):
    def make(self, coeffs):
        return Poly(coeffs, self.p)

    def test_from_terms(self):
        assert Poly.from_terms({0: 4, 3: 2, 5: 5}, 5) == Poly([4, 0, 0, 2], 5)
        assert Poly.from_terms({}, 5).is_zero()

    def test_json(self):
        a = Poly([1, 2, 3], 5)
        assert a.to_json() == {"p": 5, "coeffs": [1, 2, 3]}
        assert Poly.from_json(a.to_json()) == a
        with pytest.raises(ValueError):
            Poly.from_json({"coeffs": [1]})

    def test_mixed_moduli(self):
        with pytest.raises(ContextError):
            Poly([1], 5) + Poly([1], 7)


class TestTruncatedPoly(DensePolynomialTests):
    r = 2

    def make(self, coeffs):
        return TruncatedPoly(coeffs, self.p, self.r)

    def test_truncation(self):
        t = TruncatedPoly([0, 1], 2, 2)
        assert t**3 == TruncatedPoly.monomial(3, 2, 2)
        assert (t**4).is_zero()
        assert TruncatedPoly.monomial(4, 2, 2).is_zero()

    def test_coefficients_padding(self):
        a = TruncatedPoly([1, 0, 1], 3, 1)
        assert a.coefficients == (1, 0, 1)
        assert TruncatedPoly([1], 3, 2).coefficients == (1,) + (0,) * 8
        assert a.bound == 3
        assert a.height == 1

    def test_mixed_contexts(self, subtests):
        with subtests.test("heights"), pytest.raises(ContextError):
            TruncatedPoly([1], 3, 1) + TruncatedPoly([1], 3, 2)

        with subtests.test("kinds"), pytest.raises(ContextError):
            TruncatedPoly([1], 3, 1) + Poly([1], 3)

    def test_json(self):
        a = TruncatedPoly([0, 1, 2], 3, 1)
        assert a.to_json() == {"p": 3, "r": 1, "coeffs": [0, 1, 2]}
        assert TruncatedPoly.from_json(a.to_json()) == a
        with pytest.raises(ValueError):
            TruncatedPoly.from_json({"p": 3, "r": 1, "coeffs": [0, 0, 0, 1]})

    def test_invalid_height(self):
        with pytest.raises(ValueError):
            TruncatedPoly([1], 3, 0)


def test_poly_mul():
    assert poly_mul(Poly([2, 3], 5), Poly([4, 1], 5)) == Poly([3, 4, 3], 5)
    assert poly_mul(Poly([0, 1], 3), Poly.zero(3)).is_zero()
    with pytest.raises(ContextError):
        poly_mul(Poly([1], 5), Poly([1], 7))


def test_truncate():
    a = Poly.from_terms({1: 1, 5: 1, 25: 1}, 5)
    assert truncate(a, 2) == TruncatedPoly([0, 1, 0, 0, 0, 1], 5, 2)
    assert truncate(Poly.from_terms({0: 1, 10: 1}, 3), 2) == TruncatedPoly.one(3, 2)
    with pytest.raises(ValueError):
        truncate(a, 0)


def test_canonical_lift():
    a = TruncatedPoly([0, 2, 0, 1], 3, 2)
    lifted = canonical_lift(a)
    assert lifted == Poly([0, 2, 0, 1], 3)
    assert truncate(lifted, 2) == a


def test_substitute_frobenius(subtests):
    with subtests.test("poly"):
        assert substitute_frobenius(Poly([0, 1, 1], 3), 1) == Poly.from_terms({3: 1, 6: 1}, 3)

    with subtests.test("truncated"):
        a = TruncatedPoly([0, 1, 1], 3, 2)
        assert substitute_frobenius(a, 1) == TruncatedPoly([0, 0, 0, 1, 0, 0, 1], 3, 2)
        assert substitute_frobenius(a, 2).is_zero()

    with subtests.test("identity"):
        assert substitute_frobenius(Poly([1, 2], 3), 0) == Poly([1, 2], 3)


@given(a=coefficients, b=coefficients, r=st.integers(min_value=1, max_value=2))
def test_truncate_is_multiplicative(a, b, r):
    x, y = Poly(a, 3), Poly(b, 3)
    assert truncate(x * y, r) == truncate(x, r) * truncate(y, r)
    assert truncate(x + y, r) == truncate(x, r) + truncate(y, r)


@given(a=coefficients, b=coefficients, c=coefficients)
def test_ring_axioms(a, b, c):
    x, y, z = Poly(a, 5), Poly(b, 5), Poly(c, 5)
    assert x * y == y * x
    assert x * (y + z) == x * y + x * z
    assert (x * y) * z == x * (y * z)
