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
=====================
Finite-field kernels
=====================

.. currentmodule:: unipotent_lifts.arith

This module provides exact arithmetic over a prime field :math:`\\mathbb{F}_p`, together with the
polynomial and coalgebra kernels every other module builds on.

Field
-----

.. autosummary::
   :toctree: ../stubs/

   PrimeField
   Fp
   prime_field

Univariate polynomials
----------------------

Elements of :math:`k[t]` and of :math:`k[t]/(t^{p^r})`, stored densely.

.. autosummary::
   :toctree: ../stubs/

   Poly
   TruncatedPoly
   poly_mul
   truncate
   canonical_lift
   substitute_frobenius

Multivariate polynomials
------------------------

Sparse polynomials in named variables, used for coordinate algebras and their tensor powers.

.. autosummary::
   :toctree: ../stubs/

   Variable
   PolynomialRing
   MultiPoly
   leg_variable
   ring_of
   map_monomial_generators

Coalgebra structure
-------------------

.. autosummary::
   :toctree: ../stubs/

   comultiply_t
   comultiply
   doubled_ring
   parameter_ring

Matrices
--------

.. autosummary::
   :toctree: ../stubs/

   RingMatrix
   as_matrix_mod
   matmul_mod
   matpow_mod
   bracket_mod
   inverse_mod
   nullspace_mod
   is_nilpotent_mod
   is_strictly_upper
"""

from .coalgebra import comultiply, comultiply_t, doubled_ring, parameter_ring
from .field import Fp, PrimeField, prime_field
from .generators import map_monomial_generators
from .linalg import (
    as_matrix_mod,
    bracket_mod,
    inverse_mod,
    is_nilpotent_mod,
    is_strictly_upper,
    matmul_mod,
    matpow_mod,
    nullspace_mod,
)
from .matrices import RingMatrix
from .multipoly import MultiPoly, PolynomialRing, Variable, leg_variable, ring_of
from .poly import Poly, TruncatedPoly, canonical_lift, poly_mul, substitute_frobenius, truncate

__all__ = [
    "Fp",
    "MultiPoly",
    "Poly",
    "PolynomialRing",
    "PrimeField",
    "RingMatrix",
    "TruncatedPoly",
    "Variable",
    "as_matrix_mod",
    "bracket_mod",
    "canonical_lift",
    "comultiply",
    "comultiply_t",
    "doubled_ring",
    "inverse_mod",
    "is_nilpotent_mod",
    "is_strictly_upper",
    "leg_variable",
    "map_monomial_generators",
    "matmul_mod",
    "matpow_mod",
    "nullspace_mod",
    "parameter_ring",
    "poly_mul",
    "prime_field",
    "ring_of",
    "substitute_frobenius",
    "truncate",
]
