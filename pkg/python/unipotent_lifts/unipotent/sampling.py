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

"""Random invertible matrices for conjugation and orbit tests."""

from __future__ import annotations

from collections.abc import Iterable

import numpy as np

from ..arith import matmul_mod
from .group import BlockUnipotentGroup


def random_diagonal(n: int, p: int, rng: np.random.Generator) -> np.ndarray:
    """A random invertible diagonal matrix (a rational point of the maximal torus)."""
    return np.diag(rng.integers(1, p, size=n)).astype(np.int64)


def random_unitriangular(n: int, p: int, rng: np.random.Generator) -> np.ndarray:
    """A random upper unitriangular matrix."""
    upper = np.triu(rng.integers(0, p, size=(n, n)), k=1)
    return (upper + np.eye(n, dtype=np.int64)).astype(np.int64)


def random_permutation(n: int, rng: np.random.Generator) -> np.ndarray:
    """A random permutation matrix (a representative of a Weyl group element)."""
    return np.eye(n, dtype=np.int64)[rng.permutation(n)]


def random_ordered_permutation(
    n: int, support: Iterable[tuple[int, int]], rng: np.random.Generator
) -> np.ndarray:
    """A random permutation matrix that keeps the positions of ``support`` above the diagonal.

    The rows of :math:`w` follow a random linear extension of the order :math:`i < j` for
    :math:`(i, j)` in ``support``, so :math:`(w M w^{-1})_{ab} = M_{\\pi(a) \\pi(b)}` is strictly
    upper triangular whenever :math:`M` is supported on ``support``.

    Raises:
        ValueError: if a position of ``support`` is not above the diagonal.
    """
    successors: list[set[int]] = [set() for _ in range(n)]
    pending = [0] * n
    for i, j in set(support):
        if i >= j:
            raise ValueError(f"position ({i + 1}, {j + 1}) is not above the diagonal")
        successors[i].add(j)
        pending[j] += 1
    ready = [k for k in range(n) if not pending[k]]
    order: list[int] = []
    while ready:
        k = ready.pop(int(rng.integers(len(ready))))
        order.append(k)
        for j in sorted(successors[k]):
            pending[j] -= 1
            if not pending[j]:
                ready.append(j)
    return np.eye(n, dtype=np.int64)[order]


def random_block_upper(grp: BlockUnipotentGroup, rng: np.random.Generator) -> np.ndarray:
    """A random invertible block upper-triangular matrix, a rational point of the parabolic.

    Each diagonal block (the Levi factor) is a product of triangular, permutation and diagonal
    factors, hence invertible.
    """
    p = grp.p
    x = np.zeros((grp.n, grp.n), dtype=np.int64)
    start = 0
    for size in grp.blocks:
        stop = start + size
        block = random_unitriangular(size, p, rng)
        block = matmul_mod(block, random_permutation(size, rng), p)
        block = matmul_mod(block, random_diagonal(size, p, rng), p)
        block = matmul_mod(block, random_unitriangular(size, p, rng).T, p)
        x[start:stop, start:stop] = block
        x[start:stop, stop:] = rng.integers(0, p, size=(size, grp.n - stop))
        start = stop
    return x


NORMALIZING_KINDS = ("diagonal", "unitriangular", "block_upper")


def random_parabolic_element(
    grp: BlockUnipotentGroup, rng: np.random.Generator, kind: str | None = None
) -> np.ndarray:
    """A random element of the parabolic normalizing :math:`U`.

    Args:
        grp: the group :math:`U`.
        rng: the random generator.
        kind: one of :data:`NORMALIZING_KINDS`; drawn uniformly when omitted.

    Raises:
        ValueError: on an unknown ``kind``.
    """
    if kind is None:
        kind = NORMALIZING_KINDS[int(rng.integers(0, len(NORMALIZING_KINDS)))]
    if kind == "diagonal":
        return random_diagonal(grp.n, grp.p, rng)
    if kind == "unitriangular":
        return random_unitriangular(grp.n, grp.p, rng)
    if kind == "block_upper":
        return random_block_upper(grp, rng)
    raise ValueError(f"unknown kind of normalizing element {kind!r}")


def random_bruhat_element(grp: BlockUnipotentGroup, rng: np.random.Generator) -> np.ndarray:
    """A random :math:`w \\cdot u` with :math:`w` a permutation and :math:`u` unitriangular."""
    return matmul_mod(
        random_permutation(grp.n, rng), random_unitriangular(grp.n, grp.p, rng), grp.p
    )
