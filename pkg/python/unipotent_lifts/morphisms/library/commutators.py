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


"""Commutation tests."""

from collections.abc import Sequence
from itertools import combinations
from typing import Protocol, TypeVar, runtime_checkable

T = TypeVar("T")


@runtime_checkable
class SupportsCommutation(Protocol[T]):
    """A runtime-checkable Protocol indicating support for deciding commutation.

    Implementation of this protocol requires the method below.

    .. automethod:: _commute_
    """

    @staticmethod
    def _commute_(obj_a: T, obj_b: T) -> bool:
        """Decides whether two instances commute.

        See :func:`.commute` for more details.
        """
        ...


def commute(obj_a: SupportsCommutation, obj_b: SupportsCommutation) -> bool:
    r"""Decides whether two objects commute.

    For nilpotent matrices this is :math:`AB = BA`. For one-parameter subgroups
    :math:`\varphi, \psi` (infinitesimal or not) this asks whether
    :math:`(t, s) \mapsto \varphi(t)\psi(s)` is again a homomorphism, i.e. whether the images
    commute as group schemes.

    Objects which support this method must implement the :class:`.SupportsCommutation` protocol.

    .. note::
       Both inputs must be of the same type.

    .. doctest::
       >>> from unipotent_lifts.exponential import NilpotentMatrix
       >>> from unipotent_lifts.morphisms.library import commute
       >>> a = NilpotentMatrix([[0, 1, 0], [0, 0, 0], [0, 0, 0]], 3)
       >>> b = NilpotentMatrix([[0, 0, 0], [0, 0, 1], [0, 0, 0]], 3)
       >>> commute(a, b), commute(a, a)
       (False, True)

    Args:
        obj_a: the first object.
        obj_b: the second object.

    Returns:
        Whether the two objects commute.
    """
    return bool(type(obj_a)._commute_(obj_a, obj_b))


def commute_pairwise(objs: Sequence[SupportsCommutation]) -> tuple[int, int] | None:
    """Returns the first pair of indices whose objects do not commute, or ``None``."""
    for (i, a), (j, b) in combinations(enumerate(objs), 2):
        if not commute(a, b):
            return i, j
    return None
