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
======================
Command-line interface
======================

.. currentmodule:: unipotent_lifts.cli

The ``unipotent-lifts`` console script. Every subcommand reads JSON (from ``--input`` or stdin)
and writes a single JSON document to stdout; diagnostics go to stderr through :mod:`logging`.

.. autosummary::
   :toctree: ../stubs/

   main
   build_parser
"""

from .main import build_parser, main

__all__ = ["build_parser", "main"]
