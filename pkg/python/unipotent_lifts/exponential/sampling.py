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


"""Random elements of the Lie algebra and random commuting tuples."""

from __future__ import annotations

import numpy as np

from ..arith import inverse_mod, matmul_mod
from ..morphisms.library import commute_pairwise
from ..unipotent import (
    BlockUnipotentGroup,
    Coordinate,
    make_group,
    random_bruhat_element,
    random_diagonal,
    random_unitriangular,
)
from .tuples import CommutingTuple, NilpotentMatrix


def random_lie_element(grp: BlockUnipotentGroup, rng: np.random.Generator) -> NilpotentMatrix:
    """A uniformly random element of the Lie algebra :math:`\\mathfrak{u}`."""
    values = rng.integers(0, grp.p, size=grp.num_generators)
    coords = dict(zip(grp.generators, map(int, values), strict=False))
    return NilpotentMatrix.from_coordinates(grp, coords)


def central_generators(grp: BlockUnipotentGroup) -> list[Coordinate]:
    """The generators in the top-right block, whose elementary matrices are central in u."""
    last = len(grp.blocks) - 1
    return [g for g in grp.generators if grp.block_of(g.row) == 0 and grp.block_of(g.col) == last]


def random_commuting_tuple(
    grp: BlockUnipotentGroup, r: int, rng: np.random.Generator, attempts: int = 20
) -> CommutingTuple:
    """Draws a random commuting ``r``-tuple in the Lie algebra of ``grp``.

    Half of the draws try rejection sampling of ``r`` independent uniform elements (up to
    ``attempts`` times). Otherwise, and whenever rejection fails, the entries are random
    polynomials without constant term in a single random element, plus random central elements.
    """
    if r < 0:
        raise ValueError(f"the tuple length must be non-negative, got {r}")
    if rng.random() < 0.5:
        for _ in range(attempts):
            entries = [random_lie_element(grp, rng) for _ in range(r)]
            if commute_pairwise(entries) is None:
                return CommutingTuple._trusted(grp, entries)
    p = grp.p
    seed = random_lie_element(grp, rng).array
    powers = [seed]
    while True:
        following = matmul_mod(powers[-1], seed, p)
        if not following.any():
            break
        powers.append(following)
    center = central_generators(grp)
    entries = []
    for _ in range(r):
        total = np.zeros((grp.n, grp.n), dtype=np.int64)
        for power in powers:
            total = total + int(rng.integers(0, p)) * power
        for g in center:
            total[g.row, g.col] += int(rng.integers(0, p))
        entries.append(NilpotentMatrix.from_array(total, p))
    return CommutingTuple(grp, entries)


def random_commuting_nilpotents(
    n: int, p: int, count: int, rng: np.random.Generator
) -> list[NilpotentMatrix]:
    """Draws ``count`` commuting nilpotent ``n x n`` matrices in general position.

    A commuting tuple of strictly upper triangular matrices is conjugated by a random invertible
    matrix, so the result is usually not triangular. Requires :math:`n \\le p`.
    """
    grp = make_group([1] * n, p)
    tup = random_commuting_tuple(grp, count, rng)
    h = matmul_mod(
        matmul_mod(random_unitriangular(n, p, rng).T, random_bruhat_element(grp, rng), p),
        random_diagonal(n, p, rng),
        p,
    )
    h_inv = inverse_mod(h, p)
    return [
        NilpotentMatrix.from_array(matmul_mod(matmul_mod(h, x.array, p), h_inv, p), p) for x in tup
    ]
