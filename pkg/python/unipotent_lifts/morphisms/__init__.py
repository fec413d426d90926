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
=============================
One-parameter subgroups of U
=============================

.. currentmodule:: unipotent_lifts.morphisms

This module provides homomorphisms :math:`\\mathbb{G}_{a(r)} \\to U` and
:math:`\\mathbb{G}_a \\to U`, represented by the images of the coordinate generators under their
comorphisms, together with validation, canonical lifting and the natural group actions.

Morphisms
---------

.. autosummary::
   :toctree: ../stubs/

   InfinitesimalSubgroup
   OneParamSubgroup
   morphism_from_json

Operations
----------

.. autosummary::
   :toctree: ../stubs/

   validate
   lift
   restrict
   conjugate
   translate
   commute_morphisms
   hopf_defect
   check_hopf_morphism

Changes of generators
---------------------

Lifting is insensitive to replacing the coordinates :math:`Y` by other generators of
:math:`k[U]` built triangularly from low-degree polynomials.

.. autosummary::
   :toctree: ../stubs/

   GeneratorChange
   random_generator_change
"""

from .hopf import check_hopf_morphism, hopf_defect
from .subgroups import (
    AnyMorphism,
    GeneratorChange,
    InfinitesimalSubgroup,
    OneParamSubgroup,
    commute_morphisms,
    conjugate,
    lift,
    morphism_from_json,
    random_generator_change,
    restrict,
    translate,
    validate,
)

__all__ = [
    "AnyMorphism",
    "GeneratorChange",
    "InfinitesimalSubgroup",
    "OneParamSubgroup",
    "check_hopf_morphism",
    "commute_morphisms",
    "conjugate",
    "hopf_defect",
    "lift",
    "morphism_from_json",
    "random_generator_change",
    "restrict",
    "translate",
    "validate",
]
