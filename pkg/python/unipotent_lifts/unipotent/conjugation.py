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

"""The conjugation action of normalizing matrices on :math:`k[U]`."""

from __future__ import annotations

from typing import Any

import numpy as np

from ..arith import MultiPoly, as_matrix_mod, inverse_mod
from ..exceptions import ContextError, NormalizationError
from .coordinate import Coordinate
from .group import BlockUnipotentGroup


def conjugation_coefficients(x: Any, grp: BlockUnipotentGroup) -> np.ndarray:
    """Returns the array ``C`` with :math:`x^{-1} N x = \\sum_g C[g] \\, Y_g` for generic ``N``.

    ``C`` has shape ``(num_generators, n, n)``; ``C[k]`` is the matrix
    :math:`x^{-1} E_{g_k} x` for the ``k``-th generator :math:`g_k`.

    Raises:
        ValueError: if ``x`` is not an invertible ``n x n`` matrix modulo ``p``.
    """
    p = grp.p
    x = as_matrix_mod(x, p)
    if x.shape[0] != grp.n:
        raise ValueError(f"expected a {grp.n}x{grp.n} matrix, got shape {x.shape}")
    x_inv = inverse_mod(x, p)
    return np.stack([np.mod(np.outer(x_inv[:, g.row], x[g.col, :]), p) for g in grp.generators])


def _off_radical_mask(grp: BlockUnipotentGroup) -> np.ndarray:
    mask = np.ones((grp.n, grp.n), dtype=bool)
    for g in grp.generators:
        mask[g.row, g.col] = False
    return mask


def conjugation_forms(x: Any, grp: BlockUnipotentGroup) -> dict[Coordinate, MultiPoly]:
    """Returns the linear forms :math:`x^*(Y_g)`, entry ``g`` of :math:`x^{-1} G x`.

    Raises:
        NormalizationError: if :math:`x^{-1} U x \\not\\subseteq U`.
    """
    coefficients = conjugation_coefficients(x, grp)
    leaking = coefficients[:, _off_radical_mask(grp)]
    if leaking.any():
        g_index, _ = np.argwhere(leaking)[0]
        raise NormalizationError(
            f"conjugation does not preserve U: {grp.generators[g_index].label} leaves the radical"
        )
    ring = grp.coordinate_ring()
    forms: dict[Coordinate, MultiPoly] = {}
    width = grp.num_generators
    for target in grp.generators:
        terms = {}
        for k in range(width):
            value = int(coefficients[k, target.row, target.col])
            if value:
                terms[tuple(int(i == k) for i in range(width))] = value
        forms[target] = MultiPoly(ring, terms)
    return forms


def is_normalizing(x: Any, grp: BlockUnipotentGroup) -> bool:
    """Whether conjugation by the invertible matrix ``x`` preserves :math:`U`."""
    coefficients = conjugation_coefficients(x, grp)
    return not coefficients[:, _off_radical_mask(grp)].any()


def act_by_conjugation(x: Any, f: MultiPoly, grp: BlockUnipotentGroup) -> MultiPoly:
    """Applies the comorphism of :math:`u \\mapsto x^{-1} u x` to ``f``.

    .. doctest::
        >>> import numpy as np
        >>> from unipotent_lifts.unipotent import Y, act_by_conjugation, make_group
        >>> grp = make_group([1, 1, 1], 5)
        >>> f = grp.coordinate_ring().gen(Y(1, 3).variable())
        >>> print(act_by_conjugation(np.diag([1, 2, 3]), f, grp))
        3*Y_1_3

    Args:
        x: an invertible matrix normalizing :math:`U`.
        f: an element of ``grp.coordinate_ring()``.
        grp: the group.

    Raises:
        NormalizationError: if ``x`` does not normalize :math:`U`.
        ContextError: if ``f`` is not an element of :math:`k[U]`.
    """
    ring = grp.coordinate_ring()
    if f.ring != ring:
        raise ContextError(f"{f} is not an element of the coordinate ring of {grp}")
    forms = conjugation_forms(x, grp)
    images = {g.variable(): forms[g] for g in grp.generators}
    return f.substitute(images, ring.one)
