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

"""Dense linear algebra over :math:`\\mathbb{F}_p` on integer numpy arrays."""

from __future__ import annotations

from typing import Any

import numpy as np
from sympy import GF
from sympy.polys.matrices import DomainMatrix

from .field import prime_field


def as_matrix_mod(array: Any, p: int) -> np.ndarray:
    """Returns ``array`` as a square ``int64`` array of canonical residues.

    Raises:
        ValueError: if ``array`` is not a square matrix.
    """
    matrix = np.asarray(array, dtype=np.int64)
    if matrix.ndim != 2 or matrix.shape[0] != matrix.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {matrix.shape}")
    return np.mod(matrix, p)


def matmul_mod(a: np.ndarray, b: np.ndarray, p: int) -> np.ndarray:
    """Multiplies two residue matrices modulo ``p``."""
    return np.mod(a @ b, p)


def matpow_mod(a: np.ndarray, exponent: int, p: int) -> np.ndarray:
    """Raises a residue matrix to a non-negative power modulo ``p``."""
    result = np.eye(a.shape[0], dtype=np.int64)
    base = a
    while exponent:
        if exponent & 1:
            result = matmul_mod(result, base, p)
        base = matmul_mod(base, base, p)
        exponent >>= 1
    return result


def bracket_mod(a: np.ndarray, b: np.ndarray, p: int) -> np.ndarray:
    """Returns the commutator :math:`ab - ba` modulo ``p``."""
    return np.mod(a @ b - b @ a, p)


def is_nilpotent_mod(a: np.ndarray, p: int) -> bool:
    """Whether :math:`a^n = 0` modulo ``p`` for the size ``n`` of ``a``."""
    return not matpow_mod(a, a.shape[0], p).any()


def is_strictly_upper(a: np.ndarray) -> bool:
    """Whether every entry on or below the diagonal vanishes."""
    return not np.tril(a).any()


def _to_domain(a: np.ndarray, p: int) -> DomainMatrix:
    field = GF(p)
    rows = [[field(int(v)) for v in row] for row in a]
    return DomainMatrix(rows, a.shape, field)


def _from_domain(m: DomainMatrix, p: int) -> np.ndarray:
    rows, cols = m.shape
    if rows == 0:
        return np.zeros((0, cols), dtype=np.int64)
    matrix = m.to_Matrix()
    return np.array(
        [[int(matrix[i, j]) % p for j in range(cols)] for i in range(rows)], dtype=np.int64
    )


def inverse_mod(a: np.ndarray, p: int) -> np.ndarray:
    """Inverts a residue matrix over :math:`\\mathbb{F}_p`.

    .. doctest::
        >>> import numpy as np
        >>> from unipotent_lifts.arith import inverse_mod
        >>> inverse_mod(np.array([[1, 2], [0, 1]]), 5).tolist()
        [[1, 3], [0, 1]]

    Raises:
        ValueError: if ``a`` is singular modulo ``p``.
    """
    prime_field(p)
    a = as_matrix_mod(a, p)
    domain = _to_domain(a, p)
    if int(domain.det()) % p == 0:
        raise ValueError("the matrix is singular modulo p")
    return _from_domain(domain.inv(), p)


def nullspace_mod(a: np.ndarray, p: int) -> np.ndarray:
    """Returns a basis of the right kernel of ``a`` over :math:`\\mathbb{F}_p`, one vector per row.

    The basis is read off the reduced row echelon form: each vector has a 1 in its free coordinate
    and zeros in the other free coordinates, so the output is deterministic.
    """
    prime_field(p)
    matrix = np.mod(np.asarray(a, dtype=np.int64), p)
    if matrix.shape[0] == 0:
        return np.eye(matrix.shape[1], dtype=np.int64)
    reduced, pivots = _to_domain(matrix, p).rref()
    return _from_domain(reduced.nullspace_from_rref(pivots), p)
