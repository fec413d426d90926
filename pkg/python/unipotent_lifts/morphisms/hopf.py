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

"""Generator-wise check of the Hopf condition for maps out of :math:`k[U]`."""

from __future__ import annotations

from collections.abc import Mapping

from ..arith import MultiPoly, comultiply, doubled_ring, leg_variable, ring_of
from ..exceptions import ConstantTermError, HopfConditionError
from ..unipotent import BlockUnipotentGroup, Coordinate, comultiplication


def hopf_defect(
    grp: BlockUnipotentGroup,
    images: Mapping[Coordinate, MultiPoly],
    bound: int | None = None,
) -> tuple[Coordinate, MultiPoly] | None:
    """Finds the first generator on which comultiplication is not preserved.

    The target is a polynomial algebra :math:`A` whose variables are all primitive, such as
    :math:`k[t]` or :math:`k[t, s]`, optionally truncated at ``bound`` in every variable. For each
    generator :math:`g` (in the group's order) this compares :math:`\\Delta_A(f(g))` with
    :math:`(f \\otimes f)(\\Delta(g))` in :math:`A \\otimes A`. Checking generators suffices since
    both sides are algebra maps.

    Args:
        grp: the source group.
        images: the image of every generator, all in one ring.
        bound: the truncation bound :math:`p^r` applied to every variable of every leg, or ``None``
            for untruncated targets.

    Returns:
        ``None`` if the Hopf condition holds, else the first failing generator together with
        :math:`\\Delta_A(f(g)) - (f \\otimes f)(\\Delta(g))`.
    """
    ring = ring_of(images.values())
    target = doubled_ring(ring)
    first = {v: leg_variable(v, 1) for v in ring.variables}
    second = {v: leg_variable(v, 2) for v in ring.variables}
    legs: dict[str, MultiPoly] = {}
    for g in grp.generators:
        legs[g.variable(1)] = images[g].rename(target, first)
        legs[g.variable(2)] = images[g].rename(target, second)

    for g in grp.generators:
        lhs = comultiply(images[g], bound)
        rhs = comultiplication(g, grp).substitute(legs, target.one)
        difference = lhs - rhs
        if bound is not None:
            difference = difference.truncate(bound)
        if not difference.is_zero():
            return g, difference
    return None


def check_hopf_morphism(
    grp: BlockUnipotentGroup,
    images: Mapping[Coordinate, MultiPoly],
    bound: int | None = None,
) -> None:
    """Validates a candidate comorphism on generators.

    Raises:
        ConstantTermError: if some image has a nonzero constant term.
        HopfConditionError: if comultiplication is not preserved, see :func:`.hopf_defect`.
    """
    for g in grp.generators:
        constant = images[g].constant_term()
        if constant:
            raise ConstantTermError(
                f"the image of {g.label} has constant term {constant}, violating the counit",
                g.label,
            )
    defect = hopf_defect(grp, images, bound)
    if defect is not None:
        generator, difference = defect
        raise HopfConditionError(generator.label, difference)
