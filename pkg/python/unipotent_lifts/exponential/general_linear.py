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


"""One-parameter subgroups of :math:`GL_n` from commuting nilpotent matrices in any position."""

from __future__ import annotations

import logging
from collections.abc import Mapping, Sequence
from dataclasses import dataclass
from typing import Any

import numpy as np

from ..arith import Poly, RingMatrix, TruncatedPoly, inverse_mod, matmul_mod
from ..morphisms import AnyMorphism, InfinitesimalSubgroup, lift, morphism_from_json
from ..unipotent import make_group
from .engel import engel_flag
from .exp import extract_tuple, one_param_from_tuple, tuple_to_infinitesimal
from .tuples import CommutingTuple, NilpotentMatrix

logger = logging.getLogger(__name__)


def _conjugate_by(g: np.ndarray, x: NilpotentMatrix, g_inv: np.ndarray) -> NilpotentMatrix:
    return NilpotentMatrix.from_array(matmul_mod(matmul_mod(g, x.array, x.p), g_inv, x.p), x.p)


@dataclass(frozen=True)
class GeneralLinearSubgroup:
    """The one-parameter subgroup :math:`t \\mapsto g^{-1} \\psi(t) g` of :math:`GL_n`.

    Here :math:`\\psi` factors through the strictly upper unitriangular group, the radical of the
    Borel subgroup with blocks ``[1] * n``, and :math:`g` is the change of basis that brought the
    original matrices into that Borel subgroup.

    Args:
        flag: the matrix :math:`g`, row-major.
        subgroup: the morphism :math:`\\psi`, infinitesimal or global.

    Raises:
        ValueError: if ``flag`` is singular or does not match the group of ``subgroup``.
    """

    flag: tuple[tuple[int, ...], ...]
    subgroup: AnyMorphism

    def __post_init__(self) -> None:
        grp = self.subgroup.group
        if grp.blocks != (1,) * grp.n:
            raise ValueError(f"expected a morphism into the unitriangular group, got {grp}")
        array = np.mod(np.asarray(self.flag, dtype=np.int64), grp.p)
        if array.shape != (grp.n, grp.n):
            raise ValueError(f"the flag has shape {array.shape}, expected {(grp.n, grp.n)}")
        inverse_mod(array, grp.p)
        object.__setattr__(self, "flag", tuple(tuple(int(v) for v in row) for row in array))

    @property
    def p(self) -> int:
        """The characteristic."""
        return self.subgroup.p

    @property
    def n(self) -> int:
        """The matrix size."""
        return self.subgroup.group.n

    @property
    def height(self) -> int | None:
        """The height of an infinitesimal subgroup, ``None`` for a global one."""
        if isinstance(self.subgroup, InfinitesimalSubgroup):
            return self.subgroup.height
        return None

    @property
    def flag_array(self) -> np.ndarray:
        """The matrix :math:`g` as an ``int64`` array."""
        return np.array(self.flag, dtype=np.int64).reshape(self.n, self.n)

    def to_matrix(self) -> RingMatrix[Any]:
        """The matrix :math:`g^{-1} \\psi(t) g` over :math:`k[t]` or :math:`k[t]/(t^{p^r})`."""
        one: Any = Poly.one(self.p)
        if self.height is not None:
            one = TruncatedPoly.one(self.p, self.height)
        g = self.flag_array
        left = RingMatrix.from_array(inverse_mod(g, self.p), one)
        return left @ self.subgroup.to_matrix() @ RingMatrix.from_array(g, one)

    def extract(self, r: int | None = None) -> list[NilpotentMatrix]:
        """Recovers the commuting matrices :math:`(x_0, x_1, \\ldots)` in the original basis.

        Infinitesimal subgroups are lifted first and padded to their height.

        Args:
            r: if given, the result is padded with zero matrices to length ``r``.

        Raises:
            NotInImageError: if :math:`\\psi` is not a product of truncated exponentials.
        """
        if isinstance(self.subgroup, InfinitesimalSubgroup):
            psi = lift(self.subgroup)
            r = self.subgroup.height if r is None else r
        else:
            psi = self.subgroup
        g = self.flag_array
        g_inv = inverse_mod(g, self.p)
        return [_conjugate_by(g_inv, y, g) for y in extract_tuple(psi, r)]

    def to_json(self) -> dict[str, Any]:
        """Returns ``{"p", "n", "flag", "morphism", "matrix"}``.

        ``flag`` is row-major and ``matrix`` lists the coefficient lists of the entries of
        :meth:`to_matrix` in row-major order.
        """
        return {
            "p": self.p,
            "n": self.n,
            "flag": [v for row in self.flag for v in row],
            "morphism": self.subgroup.to_json(),
            "matrix": [list(entry.coeffs) for _, _, entry in self.to_matrix().entries()],
        }

    @classmethod
    def from_json(cls, data: Mapping[str, Any]) -> GeneralLinearSubgroup:
        """Parses the output of :meth:`to_json`; ``"matrix"`` is recomputed, not read.

        Raises:
            ValueError: on malformed input.
        """
        try:
            n = int(data["n"])
            values = [int(v) for v in data["flag"]]
            subgroup = morphism_from_json(data["morphism"])
        except (KeyError, TypeError) as exc:
            raise ValueError(f"malformed general linear subgroup: {exc}") from exc
        if len(values) != n * n:
            raise ValueError(f"expected {n * n} row-major flag entries, got {len(values)}")
        return cls(tuple(tuple(values[i * n : (i + 1) * n]) for i in range(n)), subgroup)


def general_linear_subgroup(
    xs: Sequence[NilpotentMatrix],
    r: int | None = None,
    n: int | None = None,
    p: int | None = None,
) -> GeneralLinearSubgroup:
    """The subgroup :math:`t \\mapsto \\exp(t x_0) \\exp(t^p x_1) \\cdots` of :math:`GL_n`.

    The matrices may be in any position. An Engel flag :math:`g` (see :func:`.engel_flag`) moves
    every :math:`x_i` into the strictly upper triangular matrices. The exponential of
    :math:`(g x_i g^{-1})` is formed there and translated back by :math:`g^{-1}`.

    .. doctest::
        >>> from unipotent_lifts.exponential import NilpotentMatrix, general_linear_subgroup
        >>> x = NilpotentMatrix([[0, 0], [1, 0]], 5)
        >>> gl = general_linear_subgroup([x])
        >>> print(gl.to_matrix()[1, 0])
        t
        >>> gl.extract()[0] == x
        True

    Args:
        xs: pairwise commuting nilpotent matrices with :math:`x^p = 0`.
        r: the height of an infinitesimal subgroup; ``None`` builds the global one.
        n: the matrix size, needed only when ``xs`` is empty.
        p: the characteristic, needed only when ``xs`` is empty.

    Raises:
        NonCommutingError: if the matrices do not commute.
        UnsupportedRegimeError: if ``n`` exceeds ``p``.
        ValueError: if ``xs`` is longer than ``r``.
    """
    if xs:
        p = xs[0].p
    elif n is None or p is None:
        raise ValueError("n and p are required for an empty list of matrices")
    g = engel_flag(xs, n=n, p=p)
    size = g.shape[0]
    g_inv = inverse_mod(g, p)
    borel = make_group([1] * size, p)
    tup = CommutingTuple(borel, [_conjugate_by(g, x, g_inv) for x in xs])
    subgroup: AnyMorphism
    if r is None:
        subgroup = one_param_from_tuple(tup)
    else:
        subgroup = tuple_to_infinitesimal(tup, r=r)
    logger.debug("built a one-parameter subgroup of GL_%d from %d matrices", size, len(xs))
    return GeneralLinearSubgroup(tuple(map(tuple, g.tolist())), subgroup)
