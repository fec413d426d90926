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

"""Rational points of a block-unitriangular group."""

from __future__ import annotations

from collections.abc import Mapping
from dataclasses import dataclass
from typing import Any

import numpy as np

from ..arith import as_matrix_mod, matmul_mod, matpow_mod
from ..exceptions import ContextError
from .coordinate import Coordinate
from .group import BlockUnipotentGroup


@dataclass(frozen=True)
class UnipotentElement:
    """An :math:`\\mathbb{F}_p`-point of a :class:`.BlockUnipotentGroup`.

    .. doctest::
        >>> from unipotent_lifts.unipotent import UnipotentElement, Y, make_group
        >>> grp = make_group([1, 1, 1], 5)
        >>> u = UnipotentElement.from_coordinates(grp, {Y(1, 2): 1, Y(2, 3): 1})
        >>> (u @ u.inverse()) == UnipotentElement.identity(grp)
        True

    Raises:
        ValueError: if ``matrix`` is not the identity on and below the block diagonal.
    """

    group: BlockUnipotentGroup
    matrix: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        array = as_matrix_mod(self.matrix, self.group.p)
        if array.shape[0] != self.group.n:
            raise ValueError(f"expected a {self.group.n}x{self.group.n} matrix")
        for i in range(self.group.n):
            for j in range(self.group.n):
                if self.group.is_generator(Coordinate(i, j)):
                    continue
                if array[i, j] != int(i == j):
                    raise ValueError(f"entry ({i + 1}, {j + 1}) must be {int(i == j)}")
        object.__setattr__(self, "matrix", tuple(tuple(int(v) for v in row) for row in array))

    @property
    def array(self) -> np.ndarray:
        """The matrix as an ``int64`` array."""
        return np.array(self.matrix, dtype=np.int64)

    @classmethod
    def identity(cls, group: BlockUnipotentGroup) -> UnipotentElement:
        """The identity element."""
        return cls(group, tuple(map(tuple, np.eye(group.n, dtype=np.int64).tolist())))

    @classmethod
    def from_coordinates(
        cls, group: BlockUnipotentGroup, values: Mapping[Coordinate, int]
    ) -> UnipotentElement:
        """Builds the element with the given coordinates (missing ones are zero)."""
        array = np.eye(group.n, dtype=np.int64)
        for g, value in values.items():
            g = group.check_generator(g)
            array[g.row, g.col] = value % group.p
        return cls(group, tuple(map(tuple, array.tolist())))

    @classmethod
    def random(cls, group: BlockUnipotentGroup, rng: np.random.Generator) -> UnipotentElement:
        """Draws a uniformly random element."""
        values = rng.integers(0, group.p, size=group.num_generators)
        coords = dict(zip(group.generators, map(int, values), strict=False))
        return cls.from_coordinates(group, coords)

    def coordinates(self) -> dict[Coordinate, int]:
        """The values of the coordinate functions."""
        return {g: self.matrix[g.row][g.col] for g in self.group.generators}

    def __matmul__(self, other: UnipotentElement) -> UnipotentElement:
        if not isinstance(other, UnipotentElement):
            return NotImplemented
        if other.group != self.group:
            raise ContextError(f"elements of {self.group} and {other.group}")
        product = matmul_mod(self.array, other.array, self.group.p)
        return UnipotentElement(self.group, tuple(map(tuple, product.tolist())))

    def inverse(self) -> UnipotentElement:
        """The inverse :math:`\\sum_k (-N)^k` for :math:`u = 1 + N`."""
        p = self.group.p
        nilpotent = np.mod(self.array - np.eye(self.group.n, dtype=np.int64), p)
        inverse = np.eye(self.group.n, dtype=np.int64)
        for k in range(1, len(self.group.blocks)):
            inverse = np.mod(inverse + (-1) ** k * matpow_mod(nilpotent, k, p), p)
        return UnipotentElement(self.group, tuple(map(tuple, inverse.tolist())))

    def to_json(self) -> dict[str, Any]:
        """Returns ``{"group": ..., "matrix": [[...]]}``."""
        return {"group": self.group.to_json(), "matrix": [list(row) for row in self.matrix]}
