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
==================
Brute-force oracle
==================

.. currentmodule:: unipotent_lifts.oracle

This module independently checks the correspondence between commuting tuples and infinitesimal
one-parameter subgroups on instances small enough to enumerate. Every engine returns an
:class:`.EnumerationReport` whose ``failures`` list is empty exactly when the check passes.

Configuration and reports
-------------------------

.. autosummary::
   :toctree: ../stubs/

   OracleConfig
   EnumerationReport

Enumeration
-----------

.. autosummary::
   :toctree: ../stubs/

   enumerate_commuting_tuples
   enumerate_morphisms
   enumerate_morphisms_abelian
   additive_polynomials
   cross_terms
   solve_primitive_defect
   random_morphism

Checks
------

.. autosummary::
   :toctree: ../stubs/

   verify_bijection
   certify_surjectivity
   verify_commutation_equivalence
   verify_lift_properties
   verify_equivariance
   verify_generator_independence
   verify_classical_agreement
"""

from .config import DEFAULT_BUDGET, OracleConfig
from .engines import (
    certify_surjectivity,
    enumerate_commuting_tuples,
    verify_bijection,
    verify_classical_agreement,
    verify_commutation_equivalence,
    verify_equivariance,
    verify_generator_independence,
    verify_lift_properties,
)
from .report import EnumerationReport
from .search import (
    additive_polynomials,
    cross_terms,
    enumerate_morphisms,
    enumerate_morphisms_abelian,
    random_morphism,
    solve_primitive_defect,
)

__all__ = [
    "DEFAULT_BUDGET",
    "EnumerationReport",
    "OracleConfig",
    "additive_polynomials",
    "certify_surjectivity",
    "cross_terms",
    "enumerate_commuting_tuples",
    "enumerate_morphisms",
    "enumerate_morphisms_abelian",
    "random_morphism",
    "solve_primitive_defect",
    "verify_bijection",
    "verify_classical_agreement",
    "verify_commutation_equivalence",
    "verify_equivariance",
    "verify_generator_independence",
    "verify_lift_properties",
]
