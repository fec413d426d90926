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
============
Root systems
============

.. currentmodule:: unipotent_lifts.rootsys

This module provides the root-system combinatorics of all irreducible types: positive roots in the
simple-root basis, good and torsion primes, Coxeter numbers, and the :math:`ht_J` grading
attached to a parabolic subset :math:`J` of the simple roots.

Root systems
------------

.. autosummary::
   :toctree: ../stubs/

   RootSystem
   build_root_system
   cartan_matrix
   is_good_prime
   is_torsion_prime
   coxeter_number

Parabolic data
--------------

.. autosummary::
   :toctree: ../stubs/

   ParabolicDatum
   ht_J
   nilpotence_class
   radical_roots
   parabolic_for_blocks
   root_for_position
"""

from .parabolic import (
    ParabolicDatum,
    ht_J,
    nilpotence_class,
    parabolic_for_blocks,
    radical_roots,
    root_for_position,
)
from .root_system import (
    Root,
    RootSystem,
    build_root_system,
    cartan_matrix,
    coxeter_number,
    is_good_prime,
    is_torsion_prime,
)

__all__ = [
    "ParabolicDatum",
    "Root",
    "RootSystem",
    "build_root_system",
    "cartan_matrix",
    "coxeter_number",
    "ht_J",
    "is_good_prime",
    "is_torsion_prime",
    "nilpotence_class",
    "parabolic_for_blocks",
    "radical_roots",
    "root_for_position",
]
