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
=========================
Unipotent matrix groups
=========================

.. currentmodule:: unipotent_lifts.unipotent

This module provides the block-unitriangular matrix groups realizing the unipotent radicals of
parabolic subgroups of :math:`GL_n`, together with the Hopf algebra structure of their coordinate
algebras.

Groups and coordinates
----------------------

.. autosummary::
   :toctree: ../stubs/

   BlockUnipotentGroup
   make_group
   Coordinate
   Y
   UnipotentElement

Hopf structure
--------------

.. autosummary::
   :toctree: ../stubs/

   comultiplication
   counit
   antipode

Conjugation
-----------

.. autosummary::
   :toctree: ../stubs/

   act_by_conjugation
   conjugation_forms
   conjugation_coefficients
   is_normalizing

Sampling
--------

.. autosummary::
   :toctree: ../stubs/

   random_diagonal
   random_unitriangular
   random_permutation
   random_ordered_permutation
   random_block_upper
   random_parabolic_element
   random_bruhat_element
"""

from .conjugation import (
    act_by_conjugation,
    conjugation_coefficients,
    conjugation_forms,
    is_normalizing,
)
from .coordinate import Coordinate, Y
from .element import UnipotentElement
from .group import BlockUnipotentGroup, make_group
from .hopf_structure import antipode, comultiplication, counit
from .sampling import (
    NORMALIZING_KINDS,
    random_block_upper,
    random_bruhat_element,
    random_diagonal,
    random_ordered_permutation,
    random_parabolic_element,
    random_permutation,
    random_unitriangular,
)

__all__ = [
    "NORMALIZING_KINDS",
    "BlockUnipotentGroup",
    "Coordinate",
    "UnipotentElement",
    "Y",
    "act_by_conjugation",
    "antipode",
    "comultiplication",
    "conjugation_coefficients",
    "conjugation_forms",
    "counit",
    "is_normalizing",
    "make_group",
    "random_block_upper",
    "random_bruhat_element",
    "random_diagonal",
    "random_ordered_permutation",
    "random_parabolic_element",
    "random_permutation",
    "random_unitriangular",
]
