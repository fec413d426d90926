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


"""Exhaustive and randomized construction of morphisms from the Hopf condition alone."""

from __future__ import annotations

import logging
from collections.abc import Iterator
from itertools import product

import numpy as np

from ..arith import (
    MultiPoly,
    TruncatedPoly,
    doubled_ring,
    leg_variable,
    parameter_ring,
    prime_field,
)
from ..exceptions import InternalInvariantError, InvalidMorphismError, UnsupportedRegimeError
from ..exponential import random_commuting_tuple, tuple_to_infinitesimal
from ..morphisms import InfinitesimalSubgroup
from ..unipotent import BlockUnipotentGroup, Coordinate, comultiplication
from .config import OracleConfig

logger = logging.getLogger(__name__)


def additive_polynomials(p: int, r: int) -> list[TruncatedPoly]:
    """All :math:`\\sum_{i < r} a_i t^{p^i}` in :math:`k[t]/(t^{p^r})`, in lexicographic order."""
    polys = []
    for coeffs in product(range(p), repeat=r):
        dense = [0] * (p ** (r - 1) + 1)
        for i, a in enumerate(coeffs):
            dense[p**i] = a
        polys.append(TruncatedPoly(dense, p, r))
    return polys


def _is_power_of(d: int, p: int) -> bool:
    while d % p == 0:
        d //= p
    return d == 1


def cross_terms(
    grp: BlockUnipotentGroup, g: Coordinate, images: dict[Coordinate, TruncatedPoly], r: int
) -> MultiPoly:
    """Returns :math:`(f \\otimes f)(\\Delta(g) - g' - g'')` in :math:`k[t', t'']`.

    Only generators preceding ``g`` occur in :math:`\\Delta(g) - g' - g''`; their images are taken
    from ``images``.
    """
    p = grp.p
    ring = parameter_ring(p)
    target = doubled_ring(ring)
    first = {v: leg_variable(v, 1) for v in ring.variables}
    second = {v: leg_variable(v, 2) for v in ring.variables}
    legs: dict[str, MultiPoly] = {}
    for h in grp.generators:
        image = images.get(h) if h != g else None
        if image is None:
            legs[h.variable(1)] = legs[h.variable(2)] = target.zero()
            continue
        embedded = ring.from_univariate(image, "t")
        legs[h.variable(1)] = embedded.rename(target, first)
        legs[h.variable(2)] = embedded.rename(target, second)
    return comultiplication(g, grp).substitute(legs, target.one).truncate(p**r)


def solve_primitive_defect(defect: MultiPoly, p: int, r: int) -> TruncatedPoly | None:
    """Finds ``f`` with :math:`f(t' + t'') - f(t') - f(t'') = ` ``defect`` modulo truncation.

    The equation splits by total degree ``d``. For ``d`` a power of ``p`` the left side vanishes
    identically, so ``defect`` must have no terms of that degree and the coefficient of
    :math:`t^d` is left at zero. Otherwise the coefficient is read off one monomial
    :math:`t'^a t''^{d-a}` with :math:`\\binom{d}{a} \\neq 0` and checked against the others.

    Returns:
        The solution without additive part, or ``None`` if there is none.
    """
    field = prime_field(p)
    bound = p**r
    by_degree: dict[int, dict[int, int]] = {}
    for (a, b), c in defect.terms():
        if a + b >= bound or a == 0 or b == 0:
            return None
        by_degree.setdefault(a + b, {})[a] = c
    coeffs = [0] * bound
    for d, terms in by_degree.items():
        if _is_power_of(d, p):
            return None
        pivot = next(a for a in range(1, d) if field.binomial(d, a))
        c = terms.get(pivot, 0) * field.inverse(field.binomial(d, pivot)) % p
        if any(terms.get(a, 0) != c * field.binomial(d, a) % p for a in range(1, d)):
            return None
        coeffs[d] = c
    return TruncatedPoly(coeffs, p, r)


def _search(
    grp: BlockUnipotentGroup,
    r: int,
    position: int,
    images: dict[Coordinate, TruncatedPoly],
    additive: list[TruncatedPoly],
) -> Iterator[dict[Coordinate, TruncatedPoly]]:
    if position == grp.num_generators:
        yield dict(images)
        return
    g = grp.generators[position]
    particular = solve_primitive_defect(cross_terms(grp, g, images, r), grp.p, r)
    if particular is None:
        return
    for a in additive:
        images[g] = particular + a
        yield from _search(grp, r, position + 1, images, additive)
    del images[g]


def enumerate_morphisms(
    grp: BlockUnipotentGroup, r: int, config: OracleConfig | None = None
) -> list[InfinitesimalSubgroup]:
    """Lists every homomorphism :math:`\\mathbb{G}_{a(r)} \\to U` by a pruned search.

    Generators are processed by grade. Each image is a particular solution of its Hopf equation,
    given the images of earlier generators, plus an arbitrary additive polynomial; branches whose
    equation has no solution are pruned. Every result is validated independently.

    Raises:
        BudgetExceededError: if :math:`p^{r \\cdot \\#\\text{generators}}` exceeds the budget.
    """
    config = config or OracleConfig()
    config.check_budget(grp.p ** (r * grp.num_generators))
    additive = additive_polynomials(grp.p, r)
    morphisms = []
    for images in _search(grp, r, 0, {}, additive):
        try:
            morphisms.append(InfinitesimalSubgroup(grp, r, images))
        except InvalidMorphismError as exc:
            raise InternalInvariantError(f"the search produced an invalid morphism: {exc}") from exc
    logger.info("found %d morphisms G_a(%d) -> %s", len(morphisms), r, grp)
    return morphisms


def enumerate_morphisms_abelian(
    grp: BlockUnipotentGroup, r: int, config: OracleConfig | None = None
) -> list[InfinitesimalSubgroup]:
    """Lists every homomorphism into an abelian :math:`U`: all additive images, independently.

    Raises:
        UnsupportedRegimeError: if ``grp`` has more than two blocks.
        BudgetExceededError: if :math:`p^{r \\cdot \\#\\text{generators}}` exceeds the budget.
    """
    if not grp.is_abelian:
        raise UnsupportedRegimeError("an abelian group (two blocks)", str(grp))
    config = config or OracleConfig()
    config.check_budget(grp.p ** (r * grp.num_generators))
    additive = additive_polynomials(grp.p, r)
    morphisms = [
        InfinitesimalSubgroup(grp, r, dict(zip(grp.generators, choice, strict=True)))
        for choice in product(additive, repeat=grp.num_generators)
    ]
    logger.info("found %d morphisms G_a(%d) -> %s", len(morphisms), r, grp)
    return morphisms


def random_morphism(
    grp: BlockUnipotentGroup, r: int, rng: np.random.Generator, attempts: int = 20
) -> InfinitesimalSubgroup:
    """Draws a random homomorphism :math:`\\mathbb{G}_{a(r)} \\to U`.

    Images are built generator by generator as in :func:`enumerate_morphisms`, choosing the
    additive parts at random. Grade-one images are either independent or multiples of a single
    additive polynomial, which always extends. After ``attempts`` dead ends the exponential of a
    random commuting tuple is returned instead.
    """
    p = grp.p
    additive = additive_polynomials(p, r)
    for _ in range(attempts):
        common = additive[int(rng.integers(len(additive)))]
        aligned = rng.random() < 0.5
        images: dict[Coordinate, TruncatedPoly] = {}
        for g in grp.generators:
            particular = solve_primitive_defect(cross_terms(grp, g, images, r), p, r)
            if particular is None:
                break
            if aligned and grp.grade(g) == 1:
                images[g] = particular + int(rng.integers(p)) * common
            else:
                images[g] = particular + additive[int(rng.integers(len(additive)))]
        else:
            return InfinitesimalSubgroup(grp, r, images)
    logger.debug("falling back to a commuting tuple for a random morphism into %s", grp)
    return tuple_to_infinitesimal(random_commuting_tuple(grp, r, rng), r=r)
