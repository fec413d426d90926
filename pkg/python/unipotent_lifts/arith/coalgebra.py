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

"""Comultiplication of polynomials in primitive variables."""

from __future__ import annotations

from functools import cache
from itertools import product

from .field import prime_field
from .multipoly import Monomial, MultiPoly, PolynomialRing, Variable, leg_variable
from .poly import AnyPoly, TruncatedPoly


@cache
def doubled_ring(ring: PolynomialRing) -> PolynomialRing:
    """The ring of :math:`R \\otimes R`, with variables ``v'`` then ``v''`` for each ``v``."""
    return PolynomialRing(
        ring.p,
        tuple(leg_variable(v, 1) for v in ring.variables)
        + tuple(leg_variable(v, 2) for v in ring.variables),
    )


@cache
def parameter_ring(p: int, name: str = "t") -> PolynomialRing:
    """The one-variable ring :math:`\\mathbb{F}_p[t]`."""
    return PolynomialRing(p, (Variable(name),))


def comultiply_t(a: AnyPoly) -> MultiPoly:
    """Applies :math:`\\Delta(t) = t' + t''`, extended as an algebra map.

    For a :class:`.TruncatedPoly` the result is truncated at :math:`p^r` in both variables, which is
    automatic since every input degree is already below :math:`p^r`.

    .. doctest::
        >>> from unipotent_lifts.arith import Poly, comultiply_t
        >>> print(comultiply_t(Poly([0, 0, 1], p=5)))
        t'^2 + 2*t'*t'' + t''^2
        >>> print(comultiply_t(Poly([0, 0, 0, 1], p=3)))
        t'^3 + t''^3

    Returns:
        A polynomial in the ring with variables ``t'`` and ``t''``.
    """
    field = prime_field(a.p)
    ring = doubled_ring(parameter_ring(a.p))
    terms: dict[Monomial, int] = {}
    for degree, c in enumerate(a.coeffs):
        if not c:
            continue
        for k in range(degree + 1):
            value = c * field.binomial(degree, k) % a.p
            if value:
                key = (k, degree - k)
                terms[key] = (terms.get(key, 0) + value) % a.p
    terms = {e: c for e, c in terms.items() if c}
    result = MultiPoly._trusted(ring, terms)
    if isinstance(a, TruncatedPoly):
        return result.truncate(a.bound)
    return result


def comultiply(f: MultiPoly, bound: int | None = None) -> MultiPoly:
    """Applies :math:`\\Delta(v) = v' + v''` to every variable of ``f``.

    This is the comultiplication of a polynomial algebra in primitive variables (the coordinate
    algebra of a vector group), the multivariate form of :func:`.comultiply_t`.

    Args:
        f: the polynomial to comultiply.
        bound: if given, every leg variable is truncated at this exponent.

    Returns:
        A polynomial in :func:`.doubled_ring` of ``f.ring``.
    """
    ring = f.ring
    p = ring.p
    field = prime_field(p)
    target = doubled_ring(ring)
    width = ring.num_variables
    out: dict[Monomial, int] = {}
    for exponents, c in f.as_dict().items():
        splits = [
            [
                (k, e - k, field.binomial(e, k))
                for k in range(e + 1)
                if (bound is None or (k < bound and e - k < bound)) and field.binomial(e, k)
            ]
            for e in exponents
        ]
        for choice in product(*splits):
            value = c
            first = [0] * width
            second = [0] * width
            for i, (k, rest, binom) in enumerate(choice):
                value = value * binom % p
                first[i] = k
                second[i] = rest
            key = tuple(first + second)
            out[key] = (out.get(key, 0) + value) % p
    return MultiPoly._trusted(target, {e: c for e, c in out.items() if c})
