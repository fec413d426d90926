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


"""Simultaneous strict triangularization of commuting nilpotent matrices."""

from __future__ import annotations

import logging
from collections.abc import Sequence
from typing import Any

import numpy as np

from ..arith import inverse_mod, is_nilpotent_mod, is_strictly_upper, matmul_mod, nullspace_mod
from ..exceptions import InternalInvariantError, NonCommutingError
from ..morphisms.library import commute_pairwise
from .tuples import NilpotentMatrix

logger = logging.getLogger(__name__)


def _as_nilpotent(x: Any, p: int | None) -> NilpotentMatrix:
    if isinstance(x, NilpotentMatrix):
        return x
    if p is None:
        raise ValueError("the characteristic is required for raw matrices")
    array = np.mod(np.asarray(x, dtype=np.int64), p)
    if not is_nilpotent_mod(array, p):
        raise NonCommutingError("engel_flag needs nilpotent matrices")
    return NilpotentMatrix.from_array(array, p)


def engel_flag(xs: Sequence[Any], n: int | None = None, p: int | None = None) -> np.ndarray:
    """Finds :math:`g` with :math:`g x g^{-1}` strictly upper triangular for every ``x`` in ``xs``.

    A flag :math:`0 = V_0 \\subset V_1 \\subset \\cdots \\subset V_n` with
    :math:`x V_k \\subseteq V_{k-1}` is built one vector at a time: the next vector is the first
    basis vector of :math:`\\{v : x v \\in V_k \\ \\forall x\\}` (reduced echelon basis) outside
    :math:`V_k`. Such a vector exists by Engel's theorem for the nilpotent associative algebra
    spanned by the matrices. With :math:`B = (v_1 | \\cdots | v_n)` the result is
    :math:`g = B^{-1}`.

    .. doctest::
        >>> from unipotent_lifts.arith import inverse_mod
        >>> from unipotent_lifts.exponential import NilpotentMatrix, engel_flag
        >>> x = NilpotentMatrix([[0, 0], [1, 0]], 5)
        >>> g = engel_flag([x])
        >>> (g @ x.array @ inverse_mod(g, 5) % 5).tolist()
        [[0, 1], [0, 0]]

    Args:
        xs: pairwise commuting nilpotent matrices (:class:`.NilpotentMatrix` or integer arrays).
        n: the matrix size, needed only when ``xs`` is empty.
        p: the characteristic, needed when ``xs`` is empty or holds raw arrays.

    Raises:
        NonCommutingError: if the matrices do not commute or are not nilpotent.
    """
    if p is None and xs and isinstance(xs[0], NilpotentMatrix):
        p = xs[0].p
    matrices = [_as_nilpotent(x, p) for x in xs]
    if matrices:
        p = matrices[0].p
        n = matrices[0].n
    if n is None or p is None:
        raise ValueError("n and p are required for an empty list of matrices")
    clash = commute_pairwise(matrices)
    if clash is not None:
        raise NonCommutingError(f"matrices {clash[0]} and {clash[1]} do not commute")

    arrays = [x.array for x in matrices]
    basis = np.zeros((0, n), dtype=np.int64)
    while basis.shape[0] < n:
        # rows of quotient vanish exactly on the span of the flag so far
        quotient = nullspace_mod(basis, p)
        if arrays:
            stacked = np.vstack([matmul_mod(quotient, a, p) for a in arrays])
        else:
            stacked = np.zeros((0, n), dtype=np.int64)
        candidates = nullspace_mod(stacked, p)
        for v in candidates:
            if matmul_mod(quotient, v, p).any():
                basis = np.vstack([basis, v])
                break
        else:
            raise InternalInvariantError("no common kernel vector for commuting nilpotent matrices")
    g = inverse_mod(basis.T, p)
    g_inv = basis.T % p
    for a in arrays:
        if not is_strictly_upper(matmul_mod(matmul_mod(g, a, p), g_inv, p)):
            raise InternalInvariantError("the Engel flag does not triangularize its input")
    logger.debug("built an Engel flag for %d matrices of size %d", len(arrays), n)
    return g
