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


# ruff: noqa: D205,D212,D415
"""
=================
Commutation tests
=================

.. currentmodule:: unipotent_lifts.morphisms.library

Classes can implement the :class:`.SupportsCommutation` :py:class:`~typing.Protocol`, which allows
them to be used with the functions listed below. Both :class:`.NilpotentMatrix` and the
one-parameter subgroups of :mod:`~unipotent_lifts.morphisms` do.

.. autosummary::
   :toctree: ../stubs/

   SupportsCommutation
   commute
   commute_pairwise
"""

from .commutators import SupportsCommutation, commute, commute_pairwise

__all__ = ["SupportsCommutation", "commute", "commute_pairwise"]
