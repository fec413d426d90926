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


"""Unipotent Lifts.

..
   Refer to ``docs/pydoc/index.rst`` for the actual documentation of this module.
"""

from importlib.metadata import PackageNotFoundError, version

try:
    __version__ = version("unipotent-lifts")
except PackageNotFoundError:  # pragma: no cover
    __version__ = "0.0.0"
