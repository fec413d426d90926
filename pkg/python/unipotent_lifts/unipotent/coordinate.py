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

"""The Coordinate type."""

import re
import sys
from typing import NamedTuple

from ..arith import Variable, leg_variable

if sys.version_info >= (3, 11):
    from typing import Self
else:
    from typing_extensions import Self

_LABEL = re.compile(r"^Y_(\d+)_(\d+)$")


class Coordinate(NamedTuple):
    """A coordinate function :math:`Y_{ij}` reading off one matrix entry above the block diagonal.

    Positions are 0-based; labels and variable names are 1-based, e.g. ``Y_1_3``.
    """

    row: int
    """The 0-based row of the matrix entry."""

    col: int
    """The 0-based column of the matrix entry."""

    @classmethod
    def from_positions(cls, row: int, col: int) -> Self:
        """Constructs the coordinate of the 1-based matrix entry ``(row, col)``.

        Args:
            row: the 1-based row.
            col: the 1-based column.
        """
        return cls(row=row - 1, col=col - 1)

    @classmethod
    def from_label(cls, label: str) -> Self:
        """Parses a label such as ``"Y_1_3"``.

        Raises:
            ValueError: if the label is malformed.
        """
        match = _LABEL.match(label)
        if match is None:
            raise ValueError(f"malformed coordinate label {label!r}, expected e.g. 'Y_1_2'")
        return cls.from_positions(int(match.group(1)), int(match.group(2)))

    @property
    def label(self) -> str:
        """The 1-based label, e.g. ``"Y_1_3"``."""
        return f"Y_{self.row + 1}_{self.col + 1}"

    def variable(self, leg: int = 0) -> Variable:
        """The polynomial variable of this coordinate in tensor leg ``leg`` (``0`` for none).

        .. doctest::
            >>> from unipotent_lifts.unipotent import Y
            >>> Y(1, 3).variable(2)
            "Y_1_3''"
        """
        return leg_variable(self.label, leg)


Y = Coordinate.from_positions
"""A convenience alias for :meth:`Coordinate.from_positions`."""
