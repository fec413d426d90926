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
=======================
Truncated exponentials
=======================

.. currentmodule:: unipotent_lifts.exponential

This module realizes the correspondence between commuting tuples of nilpotent matrices in the Lie
algebra :math:`\\mathfrak{u}` of a block-unitriangular group and one-parameter subgroups: a tuple
:math:`(x_0, \\ldots, x_{r-1})` maps to
:math:`t \\mapsto \\exp(t x_0) \\exp(t^p x_1) \\cdots \\exp(t^{p^{r-1}} x_{r-1})`.

Matrices and tuples
-------------------

.. autosummary::
   :toctree: ../stubs/

   NilpotentMatrix
   CommutingTuple
   bracket

Exponentials
------------

.. autosummary::
   :toctree: ../stubs/

   exp_matrix
   log_matrix
   one_param_from_tuple
   tuple_to_infinitesimal
   extract_tuple
   extract_matrices
   frobenius_twist

Triangularization
-----------------

.. autosummary::
   :toctree: ../stubs/

   engel_flag

General linear group
--------------------

.. autosummary::
   :toctree: ../stubs/

   GeneralLinearSubgroup
   general_linear_subgroup

Sampling
--------

.. autosummary::
   :toctree: ../stubs/

   random_lie_element
   random_commuting_tuple
   random_commuting_nilpotents
   central_generators
"""

from .engel import engel_flag
from .exp import (
    exp_matrix,
    extract_matrices,
    extract_tuple,
    frobenius_twist,
    log_matrix,
    one_param_from_tuple,
    tuple_to_infinitesimal,
)
from .general_linear import GeneralLinearSubgroup, general_linear_subgroup
from .sampling import (
    central_generators,
    random_commuting_nilpotents,
    random_commuting_tuple,
    random_lie_element,
)
from .tuples import CommutingTuple, NilpotentMatrix, bracket

__all__ = [
    "CommutingTuple",
    "GeneralLinearSubgroup",
    "NilpotentMatrix",
    "bracket",
    "central_generators",
    "engel_flag",
    "exp_matrix",
    "extract_matrices",
    "extract_tuple",
    "frobenius_twist",
    "general_linear_subgroup",
    "log_matrix",
    "one_param_from_tuple",
    "random_commuting_nilpotents",
    "random_commuting_tuple",
    "random_lie_element",
    "tuple_to_infinitesimal",
]
