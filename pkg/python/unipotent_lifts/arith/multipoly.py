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

"""Sparse multivariate polynomials over a prime field."""

from __future__ import annotations

import sys
from collections.abc import Callable, Iterable, Iterator, Mapping
from dataclasses import dataclass, field
from typing import Any, NewType, TypeVar

from ..exceptions import ContextError
from .field import Fp, check_same_modulus, prime_field
from .poly import AnyPoly

if sys.version_info >= (3, 11):
    from typing import Self
else:
    from typing_extensions import Self

T = TypeVar("T")

Variable = NewType("Variable", str)
"""The name of a polynomial variable, e.g. ``"Y_1_3"`` or ``"t''"``."""

Monomial = tuple[int, ...]


def leg_variable(variable: Variable | str, leg: int) -> Variable:
    """Names the copy of ``variable`` in tensor leg ``leg`` by appending ``leg`` primes.

    .. doctest::
        >>> from unipotent_lifts.arith import leg_variable
        >>> leg_variable("t", 2)
        "t''"
    """
    return Variable(str(variable) + "'" * leg)


@dataclass(frozen=True)
class PolynomialRing:
    """The polynomial ring :math:`\\mathbb{F}_p[x_1, \\dots, x_m]` in named variables.

    Rings compare by value, so two rings with the same characteristic and variable list are
    interchangeable.

    Args:
        p: the characteristic.
        variables: the ordered, pairwise distinct variable names.
    """

    p: int
    variables: tuple[Variable, ...]
    _index: dict[Variable, int] = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self) -> None:
        prime_field(self.p)
        object.__setattr__(self, "variables", tuple(Variable(v) for v in self.variables))
        index = {v: i for i, v in enumerate(self.variables)}
        if len(index) != len(self.variables):
            raise ValueError(f"duplicate variables in {self.variables}")
        object.__setattr__(self, "_index", index)

    @property
    def num_variables(self) -> int:
        """The number of variables."""
        return len(self.variables)

    def __contains__(self, variable: object) -> bool:
        return variable in self._index

    def index(self, variable: Variable | str) -> int:
        """Returns the position of ``variable``.

        Raises:
            ContextError: if the variable does not belong to this ring.
        """
        try:
            return self._index[Variable(variable)]
        except KeyError:
            raise ContextError(f"{variable!r} is not a variable of {self}") from None

    def zero(self) -> MultiPoly:
        """The zero polynomial."""
        return MultiPoly._trusted(self, {})

    def one(self) -> MultiPoly:
        """The constant polynomial ``1``."""
        return self.constant(1)

    def constant(self, value: int | Fp) -> MultiPoly:
        """The constant polynomial ``value``."""
        return MultiPoly(self, {(0,) * self.num_variables: value})

    def gen(self, variable: Variable | str, exponent: int = 1) -> MultiPoly:
        """The monomial ``variable ** exponent``."""
        exponents = [0] * self.num_variables
        exponents[self.index(variable)] = exponent
        return MultiPoly._trusted(self, {tuple(exponents): 1})

    def monomial(self, powers: Mapping[Variable, int], coeff: int = 1) -> MultiPoly:
        """Returns ``coeff`` times the product of ``variable ** exponent`` over ``powers``."""
        exponents = [0] * self.num_variables
        for variable, exponent in powers.items():
            exponents[self.index(variable)] += exponent
        return MultiPoly(self, {tuple(exponents): coeff})

    def from_univariate(self, poly: AnyPoly, variable: Variable | str) -> MultiPoly:
        """Embeds a univariate polynomial as a polynomial in ``variable``."""
        check_same_modulus(poly.p, self.p)
        position = self.index(variable)
        terms: dict[Monomial, int] = {}
        zeros = [0] * self.num_variables
        for degree, c in enumerate(poly.coeffs):
            if c:
                zeros[position] = degree
                terms[tuple(zeros)] = c
        return MultiPoly._trusted(self, terms)

    def __str__(self) -> str:
        return f"F_{self.p}[{', '.join(self.variables)}]"


def _graded_key(exponents: Monomial) -> tuple[int, Monomial]:
    return (sum(exponents), exponents)


class MultiPoly:
    """A sparse polynomial in a :class:`.PolynomialRing`.

    Terms are stored as a mapping from exponent vectors to nonzero canonical residues. Operands
    from different rings never combine; see :meth:`rename` to move between rings.

    .. doctest::
        >>> from unipotent_lifts.arith import PolynomialRing
        >>> ring = PolynomialRing(5, ("x", "y"))
        >>> x, y = ring.gen("x"), ring.gen("y")
        >>> print((x + y) ** 2)
        x^2 + 2*x*y + y^2

    Args:
        ring: the ambient ring.
        terms: a mapping from exponent vectors to coefficients.
    """

    __slots__ = ("_ring", "_terms")

    _ring: PolynomialRing
    _terms: dict[Monomial, int]

    def __init__(
        self, ring: PolynomialRing, terms: Mapping[Monomial, int | Fp] | None = None
    ) -> None:
        self._ring = ring
        self._terms = {}
        for exponents, c in (terms or {}).items():
            if len(exponents) != ring.num_variables:
                raise ValueError(
                    f"exponent vector {exponents} does not match {ring.num_variables} variables"
                )
            if isinstance(c, Fp):
                check_same_modulus(c.modulus, ring.p)
                c = c.value
            key = tuple(int(e) for e in exponents)
            if any(e < 0 for e in key):
                raise ValueError(f"negative exponent in {exponents}")
            value = (self._terms.get(key, 0) + c) % ring.p
            if value:
                self._terms[key] = value
            else:
                self._terms.pop(key, None)

    @classmethod
    def _trusted(cls, ring: PolynomialRing, terms: dict[Monomial, int]) -> Self:
        poly = cls.__new__(cls)
        poly._ring = ring
        poly._terms = terms
        return poly

    @property
    def ring(self) -> PolynomialRing:
        """The ambient polynomial ring."""
        return self._ring

    @property
    def p(self) -> int:
        """The characteristic."""
        return self._ring.p

    def terms(self) -> Iterator[tuple[Monomial, int]]:
        """Iterates over ``(exponents, coefficient)`` pairs in graded lexicographic order."""
        for exponents in sorted(self._terms, key=_graded_key):
            yield exponents, self._terms[exponents]

    def as_dict(self) -> dict[Monomial, int]:
        """Returns a copy of the term mapping."""
        return dict(self._terms)

    def coefficient(self, powers: Mapping[Variable, int] | Monomial) -> int:
        """Returns the coefficient of a monomial, given by exponent vector or variable powers."""
        if isinstance(powers, Mapping):
            exponents = [0] * self._ring.num_variables
            for variable, exponent in powers.items():
                exponents[self._ring.index(variable)] = exponent
            return self._terms.get(tuple(exponents), 0)
        return self._terms.get(tuple(powers), 0)

    def __len__(self) -> int:
        return len(self._terms)

    def is_zero(self) -> bool:
        """Whether this is the zero polynomial."""
        return not self._terms

    def constant_term(self) -> int:
        """Returns the coefficient of the empty monomial."""
        return self._terms.get((0,) * self._ring.num_variables, 0)

    @property
    def total_degree(self) -> int:
        """The largest total degree of a term (``-1`` for zero)."""
        return max((sum(e) for e in self._terms), default=-1)

    def degree_in(self, variable: Variable | str) -> int:
        """The largest exponent of ``variable`` (``-1`` for zero)."""
        position = self._ring.index(variable)
        return max((e[position] for e in self._terms), default=-1)

    def variables_used(self) -> tuple[Variable, ...]:
        """The variables occurring with a positive exponent, in ring order."""
        used = [False] * self._ring.num_variables
        for exponents in self._terms:
            for i, e in enumerate(exponents):
                if e:
                    used[i] = True
        return tuple(v for v, u in zip(self._ring.variables, used, strict=True) if u)

    def _operand(self, other: Any) -> dict[Monomial, int] | None:
        if isinstance(other, MultiPoly):
            if other._ring is not self._ring and other._ring != self._ring:
                raise ContextError(f"mixed rings {self._ring} and {other._ring}")
            return other._terms
        if isinstance(other, Fp):
            check_same_modulus(other.modulus, self.p)
            other = other.value
        if isinstance(other, int):
            value = other % self.p
            return {(0,) * self._ring.num_variables: value} if value else {}
        return None

    def __add__(self, other: Any) -> MultiPoly:
        terms = self._operand(other)
        if terms is None:
            return NotImplemented
        p = self.p
        out = dict(self._terms)
        for exponents, c in terms.items():
            value = (out.get(exponents, 0) + c) % p
            if value:
                out[exponents] = value
            else:
                out.pop(exponents, None)
        return MultiPoly._trusted(self._ring, out)

    __radd__ = __add__

    def __neg__(self) -> MultiPoly:
        p = self.p
        return MultiPoly._trusted(self._ring, {e: p - c for e, c in self._terms.items()})

    def __sub__(self, other: Any) -> MultiPoly:
        terms = self._operand(other)
        if terms is None:
            return NotImplemented
        return self + MultiPoly._trusted(self._ring, terms).__neg__()

    def __rsub__(self, other: Any) -> MultiPoly:
        return -self + other

    def __mul__(self, other: Any) -> MultiPoly:
        terms = self._operand(other)
        if terms is None:
            return NotImplemented
        p = self.p
        out: dict[Monomial, int] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in terms.items():
                key = tuple(a + b for a, b in zip(e1, e2, strict=True))
                out[key] = (out.get(key, 0) + c1 * c2) % p
        return MultiPoly._trusted(self._ring, {e: c for e, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> MultiPoly:
        if exponent < 0:
            raise ValueError("polynomials cannot be raised to negative powers")
        result = self._ring.one()
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            exponent >>= 1
            if exponent:
                base = base * base
        return result

    def __eq__(self, other: object) -> bool:
        if isinstance(other, MultiPoly):
            return self._ring == other._ring and self._terms == other._terms
        if isinstance(other, int):
            return self._terms == (self._operand(other) or {})
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self._ring, frozenset(self._terms.items())))

    def truncate(self, bound: int | Mapping[Variable, int]) -> MultiPoly:
        """Drops every term in which some variable reaches its bound.

        Args:
            bound: a common exponent bound, or one bound per variable (missing variables are left
                unbounded).
        """
        if isinstance(bound, int):
            return MultiPoly._trusted(
                self._ring, {e: c for e, c in self._terms.items() if max(e, default=0) < bound}
            )
        limits = [bound.get(v) for v in self._ring.variables]
        return MultiPoly._trusted(
            self._ring,
            {
                e: c
                for e, c in self._terms.items()
                if all(lim is None or x < lim for x, lim in zip(e, limits, strict=True))
            },
        )

    def map_generators(self, map_variable: Callable[[Variable], T], one: Callable[[], T]) -> T:
        """Evaluates this polynomial in another algebra, see :func:`.map_monomial_generators`."""
        from .generators import map_monomial_generators

        return map_monomial_generators(self, map_variable, one)

    def substitute(self, images: Mapping[Variable, T], one: Callable[[], T]) -> T:
        """Applies the algebra map sending each variable to ``images[variable]``."""
        return self.map_generators(lambda v: images[v], one)

    def rename(
        self, ring: PolynomialRing, mapping: Mapping[Variable, Variable] | None = None
    ) -> MultiPoly:
        """Moves this polynomial into ``ring``, renaming variables along ``mapping``.

        Variables absent from ``mapping`` keep their name. Used variables must exist in ``ring``.
        """
        check_same_modulus(self.p, ring.p)
        mapping = mapping or {}
        used = set(self.variables_used())
        targets = [
            ring.index(mapping.get(v, v)) if v in used else -1 for v in self._ring.variables
        ]
        out: dict[Monomial, int] = {}
        for exponents, c in self._terms.items():
            new = [0] * ring.num_variables
            for position, e in zip(targets, exponents, strict=True):
                if e:
                    new[position] += e
            key = tuple(new)
            out[key] = (out.get(key, 0) + c) % ring.p
        return MultiPoly._trusted(ring, {e: c for e, c in out.items() if c})

    def to_univariate(self, variable: Variable | str) -> dict[int, int]:
        """Returns ``{degree: coefficient}`` for a polynomial in ``variable`` alone.

        Raises:
            ContextError: if another variable occurs.
        """
        position = self._ring.index(variable)
        out: dict[int, int] = {}
        for exponents, c in self._terms.items():
            if any(e for i, e in enumerate(exponents) if i != position):
                raise ContextError(f"{self} is not a polynomial in {variable} alone")
            out[exponents[position]] = c
        return out

    def __repr__(self) -> str:
        return f"MultiPoly({self._ring!r}, {dict(self.terms())!r})"

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for exponents, c in sorted(
            self._terms.items(), key=lambda item: _graded_key(item[0]), reverse=True
        ):
            factors = [
                v if e == 1 else f"{v}^{e}"
                for v, e in zip(self._ring.variables, exponents, strict=True)
                if e
            ]
            if not factors:
                parts.append(str(c))
            elif c == 1:
                parts.append("*".join(factors))
            else:
                parts.append("*".join([str(c), *factors]))
        return " + ".join(parts)


def ring_of(polys: Iterable[MultiPoly]) -> PolynomialRing:
    """Returns the common ring of ``polys``.

    Raises:
        ContextError: if they do not share a ring, or if ``polys`` is empty.
    """
    rings = {poly.ring for poly in polys}
    if len(rings) != 1:
        raise ContextError(f"expected a single ring, got {len(rings)}")
    return rings.pop()
