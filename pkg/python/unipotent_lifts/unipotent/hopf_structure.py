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

"""The Hopf algebra structure of :math:`k[U]` induced by the matrix group law."""

from __future__ import annotations

from functools import cache

from ..arith import Fp, MultiPoly
from .coordinate import Coordinate
from .group import BlockUnipotentGroup


@cache
def _comultiplication_table(grp: BlockUnipotentGroup) -> dict[Coordinate, MultiPoly]:
    product = grp.generic_element(1) @ grp.generic_element(2)
    return {g: product[g] for g in grp.generators}


@cache
def _antipode_table(grp: BlockUnipotentGroup) -> dict[Coordinate, MultiPoly]:
    ring = grp.coordinate_ring()
    generic = grp.generic_element()
    identity = type(generic).identity(grp.n, ring.one())
    nilpotent = generic - identity
    # (I + N)^{-1} = I - N + N^2 - ..., and N^{#blocks} = 0
    inverse = identity
    power = identity
    for k in range(1, len(grp.blocks)):
        power = power @ nilpotent
        inverse = inverse + power if k % 2 == 0 else inverse - power
    return {g: inverse[g] for g in grp.generators}


def comultiplication(g: Coordinate, grp: BlockUnipotentGroup) -> MultiPoly:
    """Returns :math:`\\Delta(Y_{ij})`, entry :math:`(i, j)` of the product of two generic elements.

    .. doctest::
        >>> from unipotent_lifts.unipotent import Y, comultiplication, make_group
        >>> print(comultiplication(Y(1, 3), make_group([1, 1, 1], 5)))
        Y_1_2'*Y_2_3'' + Y_1_3' + Y_1_3''

    Returns:
        A polynomial in ``grp.coordinate_ring(2)``.

    Raises:
        ValueError: if ``g`` is not a generator of ``grp``.
    """
    return _comultiplication_table(grp)[grp.check_generator(g)]


def counit(g: Coordinate, grp: BlockUnipotentGroup) -> Fp:
    """Returns :math:`\\varepsilon(Y_{ij})`, the entry of the identity matrix, which is zero."""
    grp.check_generator(g)
    return Fp(0, grp.p)


def antipode(g: Coordinate, grp: BlockUnipotentGroup) -> MultiPoly:
    """Returns :math:`S(Y_{ij})`, entry :math:`(i, j)` of the inverse of the generic element.

    .. doctest::
        >>> from unipotent_lifts.unipotent import Y, antipode, make_group
        >>> print(antipode(Y(1, 3), make_group([1, 1, 1], 5)))
        Y_2_3*Y_1_2 + 4*Y_1_3
    """
    return _antipode_table(grp)[grp.check_generator(g)]
