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


"""Truncated exponentials and the correspondence with commuting tuples."""

from __future__ import annotations

import logging
from typing import Any, TypeVar

import numpy as np

from ..arith import (
    Poly,
    RingMatrix,
    TruncatedPoly,
    as_matrix_mod,
    matmul_mod,
    prime_field,
    substitute_frobenius,
)
from ..exceptions import (
    ContextError,
    InternalInvariantError,
    InvalidMorphismError,
    NotInImageError,
    UnsupportedRegimeError,
)
from ..morphisms import AnyMorphism, InfinitesimalSubgroup, OneParamSubgroup
from ..unipotent import BlockUnipotentGroup
from .tuples import CommutingTuple, NilpotentMatrix

logger = logging.getLogger(__name__)

T = TypeVar("T")

_INVALID_EXPONENTIAL = "the exponential of a commuting tuple failed to validate"


def exp_matrix(x: NilpotentMatrix, scalar: T) -> RingMatrix[T]:
    """Returns :math:`\\exp(s x) = \\sum_{n < p} s^n x^n / n!` for a scalar ``s`` in any ring.

    The scalar may be a :class:`.Poly`, a :class:`.TruncatedPoly`, a :class:`.MultiPoly` or an
    :class:`.Fp`; entries of the result live in the same ring.

    .. doctest::
        >>> from unipotent_lifts.arith import Poly
        >>> from unipotent_lifts.exponential import NilpotentMatrix, exp_matrix
        >>> x = NilpotentMatrix([[0, 1, 0], [0, 0, 1], [0, 0, 0]], 5)
        >>> print(exp_matrix(x, Poly([0, 1], 5))[0, 2])
        3*t^2

    Raises:
        UnsupportedRegimeError: if :math:`x^p \\neq 0`.
    """
    p = x.p
    field = prime_field(p)
    one = scalar**0  # type: ignore[operator]
    zero = 0 * one
    n = x.n
    rows = [[one if i == j else zero for j in range(n)] for i in range(n)]
    base = x.array
    power = np.eye(n, dtype=np.int64)
    scalar_power = one
    for k in range(1, p):
        power = matmul_mod(power, base, p)
        if not power.any():
            break
        scalar_power = scalar_power * scalar
        weight = field.factorial_inverse(k)
        for i, j in zip(*np.nonzero(power), strict=True):
            rows[i][j] = rows[i][j] + (weight * int(power[i, j]) % p) * scalar_power
    else:
        if matmul_mod(power, base, p).any():
            raise UnsupportedRegimeError("x^p = 0", f"a nilpotent matrix of index > {p}")
    return RingMatrix(rows)


def log_matrix(u: Any, p: int) -> NilpotentMatrix:
    """Returns :math:`\\log(u) = \\sum_{0 < k < p} (-1)^{k+1} (u - 1)^k / k` for unipotent ``u``.

    This inverts :func:`exp_matrix` at scalar 1 whenever :math:`(u - 1)^p = 0`.

    Raises:
        ValueError: if ``u`` is not unipotent.
        UnsupportedRegimeError: if :math:`(u - 1)^p \\neq 0`.
    """
    field = prime_field(p)
    array = as_matrix_mod(u, p)
    n = array.shape[0]
    nilpotent = NilpotentMatrix.from_array(array - np.eye(n, dtype=np.int64), p)
    if nilpotent.nilpotency_index > p:
        index = nilpotent.nilpotency_index
        raise UnsupportedRegimeError("(u - 1)^p = 0", f"nilpotency index {index}")
    base = nilpotent.array
    power = np.eye(n, dtype=np.int64)
    total = np.zeros((n, n), dtype=np.int64)
    for k in range(1, p):
        power = matmul_mod(power, base, p)
        if not power.any():
            break
        sign = 1 if k % 2 else -1
        total = np.mod(total + sign * field.inverse(k) * power, p)
    return NilpotentMatrix.from_array(total, p)


def _check_tuple_group(tup: CommutingTuple, grp: BlockUnipotentGroup | None) -> BlockUnipotentGroup:
    if grp is not None and grp != tup.group:
        raise ContextError(f"a tuple in the Lie algebra of {tup.group} used with {grp}")
    return tup.group


def one_param_from_tuple(
    tup: CommutingTuple, grp: BlockUnipotentGroup | None = None
) -> OneParamSubgroup:
    """The one-parameter subgroup :math:`t \\mapsto \\exp(t x_0) \\exp(t^p x_1) \\cdots`.

    .. doctest::
        >>> from unipotent_lifts.exponential import CommutingTuple, NilpotentMatrix
        >>> from unipotent_lifts.exponential import one_param_from_tuple
        >>> from unipotent_lifts.unipotent import Y, make_group
        >>> grp = make_group([1, 1, 1], 5)
        >>> x0, x1 = NilpotentMatrix.unit(grp, Y(1, 2)), NilpotentMatrix.unit(grp, Y(1, 3))
        >>> psi = one_param_from_tuple(CommutingTuple(grp, [x0, x1]))
        >>> [str(image) for image in psi.images.values()]
        ['0', 't', 't^5']

    Raises:
        ContextError: if ``grp`` is given and differs from the tuple's group.
    """
    grp = _check_tuple_group(tup, grp)
    p = grp.p
    product = RingMatrix.identity(grp.n, Poly.one(p))
    for i, x in enumerate(tup):
        if not x.is_zero():
            product = product @ exp_matrix(x, Poly.monomial(p**i, p))
    try:
        return OneParamSubgroup.from_matrix(grp, product)
    except InvalidMorphismError as exc:
        raise InternalInvariantError(_INVALID_EXPONENTIAL) from exc


def tuple_to_infinitesimal(
    tup: CommutingTuple, grp: BlockUnipotentGroup | None = None, r: int | None = None
) -> InfinitesimalSubgroup:
    """The restriction of :func:`one_param_from_tuple` to :math:`\\mathbb{G}_{a(r)}`.

    The product of exponentials is formed directly in :math:`k[t]/(t^{p^r})`. The height ``r``
    defaults to the length of the tuple.

    Raises:
        ValueError: if the tuple is longer than ``r``.
    """
    grp = _check_tuple_group(tup, grp)
    r = len(tup) if r is None else r
    if len(tup) > r:
        raise ValueError(f"a tuple of length {len(tup)} does not define a height-{r} morphism")
    p = grp.p
    product = RingMatrix.identity(grp.n, TruncatedPoly.one(p, r))
    for i, x in enumerate(tup):
        if not x.is_zero():
            product = product @ exp_matrix(x, TruncatedPoly.monomial(p**i, p, r))
    try:
        return InfinitesimalSubgroup.from_matrix(grp, r, product)
    except InvalidMorphismError as exc:
        raise InternalInvariantError(_INVALID_EXPONENTIAL) from exc


def extract_matrices(matrix: RingMatrix[Poly], p: int) -> list[NilpotentMatrix]:
    """Writes a polynomial matrix as :math:`\\exp(t x_0) \\exp(t^p x_1) \\cdots` if it is one.

    The tangent datum :math:`x_0` is the coefficient of :math:`t`. After multiplying by
    :math:`\\exp(-t x_0)` only powers :math:`t^{pm}` may remain; they are rewritten in
    :math:`s = t^p` and the procedure repeats until the identity is left. The matrix need not
    come from a block-unitriangular group.

    .. doctest::
        >>> from unipotent_lifts.arith import Poly, RingMatrix
        >>> from unipotent_lifts.exponential import extract_matrices
        >>> one, zero, t = Poly.one(5), Poly.zero(5), Poly([0, 1], 5)
        >>> [x.matrix for x in extract_matrices(RingMatrix([[one, zero], [t, one]]), 5)]
        [((0, 0), (1, 0))]

    Raises:
        NotInImageError: if a constant term differs from the identity or a peel step leaves a
            term whose degree is not a multiple of ``p``.
        ValueError: if a tangent datum is not nilpotent.
        UnsupportedRegimeError: if a tangent datum :math:`x` has :math:`x^p \\neq 0`.
    """
    n = matrix.n
    identity = RingMatrix.identity(n, Poly.one(p))
    t = Poly.monomial(1, p)
    current = matrix
    entries: list[NilpotentMatrix] = []
    while current != identity:
        for i, j, entry in current.entries():
            if entry[0] != int(i == j):
                raise NotInImageError((i, j), 0)
        x = NilpotentMatrix.from_array([[current[i, j][1] for j in range(n)] for i in range(n)], p)
        if not x.is_zero():
            current = exp_matrix(x, -t) @ current
        for i, j, entry in current.entries():
            residual = entry - 1 if i == j else entry
            for degree in residual.support():
                if degree % p:
                    raise NotInImageError((i, j), degree)
        current = current.map(lambda entry: Poly._trusted(entry.coeffs[::p], p))
        entries.append(x)
    return entries


def extract_tuple(psi: OneParamSubgroup, r: int | None = None) -> CommutingTuple:
    """Recovers :math:`(x_0, x_1, \\ldots)` with ``one_param_from_tuple`` equal to ``psi``.

    The matrix :math:`\\psi(t)` is peeled by :func:`extract_matrices`.

    .. doctest::
        >>> from unipotent_lifts.exponential import extract_tuple
        >>> from unipotent_lifts.morphisms import OneParamSubgroup
        >>> from unipotent_lifts.unipotent import make_group
        >>> grp = make_group([1, 1, 1], 5)
        >>> psi = OneParamSubgroup(grp, {"Y_1_2": [0, 1], "Y_2_3": [], "Y_1_3": [0, 0, 0, 0, 0, 1]})
        >>> [x.matrix for x in extract_tuple(psi)]
        [((0, 1, 0), (0, 0, 0), (0, 0, 0)), ((0, 0, 1), (0, 0, 0), (0, 0, 0))]

    Args:
        psi: a one-parameter subgroup.
        r: if given, the result is padded with zero matrices to length ``r``.

    Raises:
        NotInImageError: if a peel step leaves a term whose degree is not a multiple of ``p``.
        ValueError: if ``r`` is shorter than the recovered tuple.
    """
    grp = psi.group
    entries = extract_matrices(psi.to_matrix(), grp.p)
    logger.debug("extracted a tuple of length %d from %s", len(entries), psi)
    result = CommutingTuple(grp, entries)
    return result if r is None else result.pad(r)


def frobenius_twist(phi: AnyMorphism, i: int) -> AnyMorphism:
    """Precomposes with the Frobenius :math:`a \\mapsto a^{p^i}`, i.e. :math:`t \\mapsto t^{p^i}`.

    On a height-``r`` morphism the terms pushed past :math:`p^r` vanish.
    """
    return phi._rebuild({g: substitute_frobenius(image, i) for g, image in phi.items()})
