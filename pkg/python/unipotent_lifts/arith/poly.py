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

"""Dense univariate polynomials over a prime field, plain and truncated."""

from __future__ import annotations

import sys
from collections.abc import Iterable, Sequence
from typing import Any, Union

from ..exceptions import ContextError
from .field import Fp, check_same_modulus, prime_field

if sys.version_info >= (3, 11):
    from typing import Self
else:
    from typing_extensions import Self


def _normalize(coeffs: Iterable[int | Fp], p: int) -> tuple[int, ...]:
    values = []
    for c in coeffs:
        if isinstance(c, Fp):
            check_same_modulus(c.modulus, p)
            values.append(c.value)
        elif isinstance(c, int):
            values.append(c % p)
        else:
            raise TypeError(f"coefficients must be integers or Fp, got {type(c).__name__}")
    return _strip(values)


def _strip(values: list[int]) -> tuple[int, ...]:
    end = len(values)
    while end and values[end - 1] == 0:
        end -= 1
    return tuple(values[:end])


def _convolve(
    a: Sequence[int], b: Sequence[int], p: int, limit: int | None = None
) -> tuple[int, ...]:
    if not a or not b:
        return ()
    size = len(a) + len(b) - 1
    if limit is not None:
        size = min(size, limit)
    out = [0] * size
    for i, ai in enumerate(a):
        if i >= size:
            break
        if ai == 0:
            continue
        for j in range(min(len(b), size - i)):
            out[i + j] += ai * b[j]
    return _strip([c % p for c in out])


def _format_univariate(coeffs: Sequence[int], name: str) -> str:
    parts = []
    for degree, c in enumerate(coeffs):
        if c == 0:
            continue
        if degree == 0:
            parts.append(str(c))
            continue
        power = name if degree == 1 else f"{name}^{degree}"
        parts.append(power if c == 1 else f"{c}*{power}")
    return " + ".join(parts) if parts else "0"


class _DensePolynomial:
    """Shared behavior of :class:`.Poly` and :class:`.TruncatedPoly`."""

    __slots__ = ("_coeffs", "_p")

    _coeffs: tuple[int, ...]
    _p: int

    @property
    def p(self) -> int:
        """The characteristic of the coefficient field."""
        return self._p

    @property
    def coeffs(self) -> tuple[int, ...]:
        """The coefficients as canonical residues, lowest degree first, without trailing zeros."""
        return self._coeffs

    @property
    def degree(self) -> int:
        """The degree, with the convention that the zero polynomial has degree ``-1``."""
        return len(self._coeffs) - 1

    def is_zero(self) -> bool:
        """Whether this is the zero polynomial."""
        return not self._coeffs

    def coefficient(self, degree: int) -> Fp:
        """Returns the coefficient of :math:`t^{degree}` as a field element."""
        return Fp(self[degree], self._p)

    def __getitem__(self, degree: int) -> int:
        if 0 <= degree < len(self._coeffs):
            return self._coeffs[degree]
        return 0

    def support(self) -> list[int]:
        """Returns the degrees carrying a nonzero coefficient, in increasing order."""
        return [d for d, c in enumerate(self._coeffs) if c]

    def order(self) -> int:
        """Returns the lowest degree with a nonzero coefficient (``-1`` for zero)."""
        for d, c in enumerate(self._coeffs):
            if c:
                return d
        return -1

    def constant_term(self) -> int:
        """Returns the coefficient of :math:`t^0`."""
        return self[0]

    def evaluate(self, value: Any) -> Any:
        """Evaluates at ``value`` by Horner's rule.

        ``value`` may be an integer, an :class:`.Fp` or any ring element supporting ``+`` and ``*``
        with integers (e.g. another polynomial), so that this also computes compositions.
        """
        if isinstance(value, Fp):
            check_same_modulus(value.modulus, self._p)
            value = value.value
        acc: Any = 0
        for c in reversed(self._coeffs):
            acc = acc * value + c
        if isinstance(acc, int):
            return acc % self._p
        return acc

    __call__ = evaluate

    def __str__(self) -> str:
        return _format_univariate(self._coeffs, "t")

    def __hash__(self) -> int:
        return hash((type(self).__name__, self._context(), self._coeffs))

    def __eq__(self, other: object) -> bool:
        if type(other) is not type(self):
            return NotImplemented
        assert isinstance(other, _DensePolynomial)
        return self._context() == other._context() and self._coeffs == other._coeffs

    def _context(self) -> tuple[int, ...]:
        return (self._p,)

    def _limit(self) -> int | None:
        return None

    def _make(self, coeffs: tuple[int, ...]) -> Self:
        raise NotImplementedError

    def _operand(self, other: Any) -> tuple[int, ...] | None:
        """Returns the coefficients of ``other`` in this context, or ``None`` if unsupported."""
        if isinstance(other, int):
            return _strip([other % self._p])
        if isinstance(other, Fp):
            check_same_modulus(other.modulus, self._p)
            return _strip([other.value])
        if isinstance(other, _DensePolynomial):
            if type(other) is not type(self):
                raise ContextError(
                    f"cannot combine {type(self).__name__} with {type(other).__name__}"
                )
            check_same_modulus(self._p, other._p)
            if self._context() != other._context():
                raise ContextError(f"mixed contexts {self._context()} and {other._context()}")
            return other._coeffs
        return None

    def __add__(self, other: Any) -> Self:
        coeffs = self._operand(other)
        if coeffs is None:
            return NotImplemented
        a, b = self._coeffs, coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = (out[i] + c) % self._p
        return self._make(_strip(out))

    __radd__ = __add__

    def __neg__(self) -> Self:
        return self._make(tuple((-c) % self._p for c in self._coeffs))

    def __sub__(self, other: Any) -> Self:
        coeffs = self._operand(other)
        if coeffs is None:
            return NotImplemented
        return self + self._make(tuple((-c) % self._p for c in coeffs))

    def __rsub__(self, other: Any) -> Self:
        return -self + other

    def __mul__(self, other: Any) -> Self:
        coeffs = self._operand(other)
        if coeffs is None:
            return NotImplemented
        return self._make(_convolve(self._coeffs, coeffs, self._p, self._limit()))

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> Self:
        if exponent < 0:
            raise ValueError("polynomials cannot be raised to negative powers")
        result = self._make((1,))
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result


class Poly(_DensePolynomial):
    """A polynomial in :math:`\\mathbb{F}_p[t]`.

    Coefficients are stored densely as canonical residues, lowest degree first, and the highest
    stored coefficient is never zero.

    .. doctest::
        >>> from unipotent_lifts.arith import Poly
        >>> a = Poly([2, 3], p=5)
        >>> b = Poly([4, 1], p=5)
        >>> print(a * b)
        3 + 4*t + 3*t^2

    Args:
        coeffs: the coefficients, lowest degree first. Integers are reduced modulo ``p``.
        p: the characteristic.

    Raises:
        ValueError: if ``p`` is not prime.
        ContextError: if an :class:`.Fp` coefficient carries a different modulus.
    """

    __slots__ = ()

    def __init__(self, coeffs: Iterable[int | Fp], p: int) -> None:
        prime_field(p)
        self._p = p
        self._coeffs = _normalize(coeffs, p)

    @classmethod
    def _trusted(cls, coeffs: tuple[int, ...], p: int) -> Self:
        poly = cls.__new__(cls)
        poly._p = p
        poly._coeffs = coeffs
        return poly

    def _make(self, coeffs: tuple[int, ...]) -> Self:
        return self._trusted(coeffs, self._p)

    @classmethod
    def zero(cls, p: int) -> Self:
        """The zero polynomial."""
        return cls((), p)

    @classmethod
    def one(cls, p: int) -> Self:
        """The constant polynomial ``1``."""
        return cls((1,), p)

    @classmethod
    def monomial(cls, degree: int, p: int, coeff: int = 1) -> Self:
        """Returns ``coeff * t^degree``."""
        return cls([0] * degree + [coeff], p)

    @classmethod
    def from_terms(cls, terms: dict[int, int], p: int) -> Self:
        """Builds a polynomial from a sparse ``{degree: coefficient}`` mapping."""
        if not terms:
            return cls.zero(p)
        coeffs = [0] * (max(terms) + 1)
        for degree, c in terms.items():
            coeffs[degree] = (coeffs[degree] + c) % p
        return cls(coeffs, p)

    def __repr__(self) -> str:
        return f"Poly({list(self._coeffs)}, p={self._p})"

    def to_json(self) -> dict[str, Any]:
        """Returns the JSON form ``{"p": p, "coeffs": [...]}``."""
        return {"p": self._p, "coeffs": list(self._coeffs)}

    @classmethod
    def from_json(cls, data: dict[str, Any]) -> Self:
        """Parses the output of :meth:`to_json`.

        Raises:
            ValueError: on malformed input.
        """
        try:
            p = int(data["p"])
            coeffs = [int(c) for c in data["coeffs"]]
        except (KeyError, TypeError) as exc:
            raise ValueError(f"malformed polynomial {data!r}") from exc
        return cls(coeffs, p)


class TruncatedPoly(_DensePolynomial):
    """An element of :math:`\\mathbb{F}_p[t]/(t^{p^r})`.

    The element is identified with its unique representative of degree :math:`< p^r`. Products are
    re-truncated; combining elements of different heights raises :class:`.ContextError`.

    .. doctest::
        >>> from unipotent_lifts.arith import TruncatedPoly
        >>> a = TruncatedPoly([0, 1, 0, 1], p=2, r=2)
        >>> print(a * a)
        t^2
        >>> len(a.coefficients)
        4

    Args:
        coeffs: the coefficients, lowest degree first. Degrees :math:`\\ge p^r` are discarded.
        p: the characteristic.
        r: the height, at least 1.
    """

    __slots__ = ("_bound", "_r")

    _r: int
    _bound: int

    def __init__(self, coeffs: Iterable[int | Fp], p: int, r: int) -> None:
        prime_field(p)
        if not isinstance(r, int) or r < 1:
            raise ValueError(f"the height must be a positive integer, got {r!r}")
        self._p = p
        self._r = r
        self._bound = p**r
        self._coeffs = _normalize(list(coeffs)[: self._bound], p)

    @classmethod
    def _trusted(cls, coeffs: tuple[int, ...], p: int, r: int) -> Self:
        poly = cls.__new__(cls)
        poly._p = p
        poly._r = r
        poly._bound = p**r
        poly._coeffs = coeffs
        return poly

    def _make(self, coeffs: tuple[int, ...]) -> Self:
        if len(coeffs) > self._bound:
            coeffs = _strip(list(coeffs[: self._bound]))
        return self._trusted(coeffs, self._p, self._r)

    def _context(self) -> tuple[int, ...]:
        return (self._p, self._r)

    def _limit(self) -> int | None:
        return self._bound

    @property
    def height(self) -> int:
        """The height ``r``."""
        return self._r

    @property
    def bound(self) -> int:
        """The truncation bound :math:`p^r`."""
        return self._bound

    @property
    def coefficients(self) -> tuple[int, ...]:
        """All :math:`p^r` coefficients, lowest degree first, zero padded."""
        return self._coeffs + (0,) * (self._bound - len(self._coeffs))

    @classmethod
    def zero(cls, p: int, r: int) -> Self:
        """The zero element."""
        return cls((), p, r)

    @classmethod
    def one(cls, p: int, r: int) -> Self:
        """The unit element."""
        return cls((1,), p, r)

    @classmethod
    def monomial(cls, degree: int, p: int, r: int, coeff: int = 1) -> Self:
        """Returns ``coeff * t^degree`` (zero when ``degree >= p^r``)."""
        return cls([0] * degree + [coeff], p, r)

    def __repr__(self) -> str:
        return f"TruncatedPoly({list(self._coeffs)}, p={self._p}, r={self._r})"

    def to_json(self) -> dict[str, Any]:
        """Returns the JSON form ``{"p": p, "r": r, "coeffs": [...]}`` without trailing zeros."""
        return {"p": self._p, "r": self._r, "coeffs": list(self._coeffs)}

    @classmethod
    def from_json(cls, data: dict[str, Any]) -> Self:
        """Parses the output of :meth:`to_json`.

        Raises:
            ValueError: on malformed input or coefficients beyond degree :math:`p^r - 1`.
        """
        try:
            p = int(data["p"])
            r = int(data["r"])
            coeffs = [int(c) for c in data["coeffs"]]
        except (KeyError, TypeError) as exc:
            raise ValueError(f"malformed truncated polynomial {data!r}") from exc
        if len(_strip([c % p for c in coeffs])) > p**r:
            raise ValueError(f"coefficients beyond degree p^r - 1 = {p**r - 1}")
        return cls(coeffs, p, r)


AnyPoly = Union[Poly, TruncatedPoly]


def poly_mul(a: Poly, b: Poly) -> Poly:
    """Multiplies two polynomials.

    Raises:
        ContextError: if the moduli differ.
    """
    return a * b


def truncate(a: Poly, r: int) -> TruncatedPoly:
    """Projects ``a`` onto :math:`\\mathbb{F}_p[t]/(t^{p^r})`, discarding degrees :math:`\\ge p^r`.

    .. doctest::
        >>> from unipotent_lifts.arith import Poly, truncate
        >>> a = Poly.from_terms({1: 1, 5: 1, 25: 1}, p=5)
        >>> print(truncate(a, 2))
        t + t^5
    """
    if r < 1:
        raise ValueError(f"the height must be a positive integer, got {r!r}")
    return TruncatedPoly._trusted(_strip(list(a.coeffs[: a.p**r])), a.p, r)


def canonical_lift(a: TruncatedPoly) -> Poly:
    """Returns the unique preimage of ``a`` of degree :math:`< p^r`."""
    return Poly._trusted(a.coeffs, a.p)


def substitute_frobenius(a: AnyPoly, i: int) -> AnyPoly:
    """Replaces :math:`t` by :math:`t^{p^i}`.

    On a :class:`.TruncatedPoly` the terms pushed to degree :math:`\\ge p^r` vanish.

    .. doctest::
        >>> from unipotent_lifts.arith import Poly, substitute_frobenius
        >>> print(substitute_frobenius(Poly([0, 1, 1], p=3), 1))
        t^3 + t^6
    """
    if i < 0:
        raise ValueError(f"the twist order must be non-negative, got {i}")
    if i == 0 or a.is_zero():
        return a
    step = a.p**i
    coeffs = [0] * (step * a.degree + 1)
    for degree, c in enumerate(a.coeffs):
        coeffs[degree * step] = c
    return a._make(_strip(coeffs))
