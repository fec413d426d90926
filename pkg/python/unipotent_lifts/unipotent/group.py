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

"""Block-unitriangular matrix groups and their coordinate rings."""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass, field
from functools import cache
from typing import Any

from ..arith import MultiPoly, PolynomialRing, RingMatrix, prime_field
from ..exceptions import UnsupportedRegimeError
from ..rootsys import ParabolicDatum, Root, parabolic_for_blocks, root_for_position
from .coordinate import Coordinate


@dataclass(frozen=True)
class BlockUnipotentGroup:
    """The unipotent radical :math:`U` of a block upper-triangular parabolic in :math:`GL_n`.

    Its points are the matrices that are the identity on and below the block diagonal. The
    coordinate algebra :math:`k[U]` is the polynomial ring in the entries :math:`Y_{ij}` above the
    block diagonal, graded by the weight :math:`-(\\varepsilon_i - \\varepsilon_j)` and by
    :math:`ht_J(Y_{ij}) = \\mathrm{block}(j) - \\mathrm{block}(i)`.

    Build instances with :func:`.make_group`.

    .. doctest::
        >>> from unipotent_lifts.unipotent import make_group
        >>> grp = make_group([1, 1, 1], 5)
        >>> [(g.label, grp.grade(g)) for g in grp.generators]
        [('Y_2_3', 1), ('Y_1_2', 1), ('Y_1_3', 2)]

    Raises:
        ValueError: on invalid block sizes or a non-prime ``p``.
        UnsupportedRegimeError: if the nilpotence class is not below ``p``.
    """

    blocks: tuple[int, ...]
    """The block sizes, summing to :attr:`n`."""

    p: int
    """The characteristic."""

    _block_of: tuple[int, ...] = field(init=False, repr=False, compare=False)
    _generators: tuple[Coordinate, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        blocks = tuple(int(b) for b in self.blocks)
        object.__setattr__(self, "blocks", blocks)
        if len(blocks) < 2 or any(b < 1 for b in blocks):
            raise ValueError(f"need at least two positive block sizes, got {list(blocks)}")
        prime_field(self.p)
        if len(blocks) - 1 >= self.p:
            raise UnsupportedRegimeError(
                "nilpotence class < p",
                f"{len(blocks)} blocks give class {len(blocks) - 1} with p={self.p}",
            )
        block_of = tuple(index for index, size in enumerate(blocks) for _ in range(size))
        object.__setattr__(self, "_block_of", block_of)
        n = len(block_of)
        positions = [
            Coordinate(i, j)
            for i in range(n)
            for j in range(i + 1, n)
            if block_of[i] < block_of[j]
        ]
        positions.sort(
            key=lambda g: (block_of[g.col] - block_of[g.row], root_for_position(g.row, g.col, n))
        )
        object.__setattr__(self, "_generators", tuple(positions))

    @property
    def n(self) -> int:
        """The matrix size."""
        return len(self._block_of)

    @property
    def generators(self) -> tuple[Coordinate, ...]:
        """The coordinate functions, ordered by :math:`(ht_J, \\text{root coordinates})`."""
        return self._generators

    @property
    def num_generators(self) -> int:
        """The dimension of :math:`U`."""
        return len(self._generators)

    @property
    def nilpotence_class(self) -> int:
        """The nilpotence class, one less than the number of blocks."""
        return len(self.blocks) - 1

    @property
    def is_abelian(self) -> bool:
        """Whether :math:`U` is commutative (two blocks)."""
        return len(self.blocks) == 2

    def block_of(self, index: int) -> int:
        """The 0-based block containing matrix row/column ``index``."""
        return self._block_of[index]

    def is_generator(self, coordinate: Coordinate) -> bool:
        """Whether ``coordinate`` lies above the block diagonal."""
        i, j = coordinate
        return 0 <= i < self.n and 0 <= j < self.n and self._block_of[i] < self._block_of[j]

    def check_generator(self, coordinate: Coordinate) -> Coordinate:
        """Returns ``coordinate`` as a :class:`.Coordinate`, raising if it is not a generator.

        Raises:
            ValueError: if the position does not lie above the block diagonal.
        """
        coordinate = Coordinate(*coordinate)
        if not self.is_generator(coordinate):
            raise ValueError(f"{coordinate.label} is not a coordinate of {self}")
        return coordinate

    def grade(self, coordinate: Coordinate) -> int:
        """The :math:`ht_J` grade :math:`\\mathrm{block}(j) - \\mathrm{block}(i)`."""
        i, j = self.check_generator(coordinate)
        return self._block_of[j] - self._block_of[i]

    def weight(self, coordinate: Coordinate) -> tuple[int, ...]:
        """The weight :math:`-(\\varepsilon_i - \\varepsilon_j)` as an integer vector."""
        i, j = self.check_generator(coordinate)
        return tuple(-1 if k == i else 1 if k == j else 0 for k in range(self.n))

    def root(self, coordinate: Coordinate) -> Root:
        """The positive root :math:`\\varepsilon_i - \\varepsilon_j` in simple-root coordinates."""
        i, j = self.check_generator(coordinate)
        return root_for_position(i, j, self.n)

    def parabolic_datum(self) -> ParabolicDatum:
        """The type-:math:`A_{n-1}` datum whose unipotent radical this group is."""
        return parabolic_for_blocks(self.blocks)

    def coordinate_ring(self, legs: int = 1) -> PolynomialRing:
        """The polynomial ring of :math:`k[U]^{\\otimes legs}`.

        For ``legs == 1`` the variables are the plain coordinates ``Y_i_j``; otherwise the copies
        ``Y_i_j'``, ``Y_i_j''``, ... of leg 1, 2, ... follow each other.
        """
        return _coordinate_ring(self, legs)

    def generic_element(self, leg: int = 0, legs: int | None = None) -> RingMatrix[MultiPoly]:
        """The matrix of coordinate functions of tensor leg ``leg``.

        Args:
            leg: the tensor leg (``0`` for :math:`k[U]` itself).
            legs: the number of legs of the ambient ring; defaults to 1 for ``leg == 0`` and to
                ``max(leg, 2)`` otherwise.
        """
        if legs is None:
            legs = 1 if leg == 0 else max(leg, 2)
        ring = self.coordinate_ring(legs)
        one = ring.one()
        zero = ring.zero()
        rows = []
        for i in range(self.n):
            row = []
            for j in range(self.n):
                if i == j:
                    row.append(one)
                elif self.is_generator(Coordinate(i, j)):
                    row.append(ring.gen(Coordinate(i, j).variable(leg)))
                else:
                    row.append(zero)
            rows.append(row)
        return RingMatrix(rows)

    def monomial_grade(self, exponents: Sequence[int]) -> int:
        """The total :math:`ht_J` grade of a monomial of :math:`k[U]` given by exponents."""
        return sum(e * self.grade(g) for e, g in zip(exponents, self._generators, strict=False))

    def in_k_u_below_p(self, exponents: Sequence[int]) -> bool:
        """Whether a monomial lies in :math:`k[U]_{<p}`, i.e. has total grade at most ``p - 1``."""
        return self.monomial_grade(exponents) <= self.p - 1

    def to_json(self) -> dict[str, Any]:
        """Returns ``{"p": p, "blocks": [...]}``."""
        return {"p": self.p, "blocks": list(self.blocks)}

    @classmethod
    def from_json(cls, data: dict[str, Any]) -> BlockUnipotentGroup:
        """Parses the output of :meth:`to_json`.

        Raises:
            ValueError: on malformed input.
        """
        try:
            return make_group([int(b) for b in data["blocks"]], int(data["p"]))
        except (KeyError, TypeError) as exc:
            raise ValueError(f"malformed group descriptor {data!r}") from exc

    def __str__(self) -> str:
        return f"U(blocks={list(self.blocks)}, p={self.p})"


@cache
def _coordinate_ring(grp: BlockUnipotentGroup, legs: int) -> PolynomialRing:
    if legs < 1:
        raise ValueError(f"the number of tensor legs must be positive, got {legs}")
    if legs == 1:
        variables = [g.variable() for g in grp.generators]
    else:
        variables = [g.variable(leg) for leg in range(1, legs + 1) for g in grp.generators]
    return PolynomialRing(grp.p, tuple(variables))


def make_group(blocks: Sequence[int], p: int) -> BlockUnipotentGroup:
    """Builds the block-unitriangular group with the given block sizes over :math:`\\mathbb{F}_p`.

    Raises:
        ValueError: on fewer than two blocks or a non-prime ``p``.
        UnsupportedRegimeError: if the number of blocks exceeds ``p`` (class not below ``p``).
    """
    return _make_group(tuple(int(b) for b in blocks), int(p))


@cache
def _make_group(blocks: tuple[int, ...], p: int) -> BlockUnipotentGroup:
    return BlockUnipotentGroup(blocks, p)
