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


"""Nilpotent matrices and commuting tuples of them."""

from __future__ import annotations

from collections.abc import Iterable, Iterator, Mapping, Sequence
from dataclasses import dataclass
from typing import Any

import numpy as np

from ..arith import as_matrix_mod, bracket_mod, is_nilpotent_mod, prime_field
from ..exceptions import ContextError, NonCommutingError
from ..morphisms.library import commute_pairwise
from ..unipotent import BlockUnipotentGroup, Coordinate, make_group


@dataclass(frozen=True)
class NilpotentMatrix:
    """A nilpotent ``n x n`` matrix over :math:`\\mathbb{F}_p`.

    .. doctest::
        >>> from unipotent_lifts.exponential import NilpotentMatrix
        >>> x = NilpotentMatrix([[0, 1, 0], [0, 0, 1], [0, 0, 0]], 5)
        >>> x.nilpotency_index
        3

    Args:
        matrix: the entries, row-major.
        p: the characteristic.

    Raises:
        ValueError: if the matrix is not square or not nilpotent.
    """

    matrix: tuple[tuple[int, ...], ...]
    p: int

    def __post_init__(self) -> None:
        prime_field(self.p)
        array = as_matrix_mod(self.matrix, self.p)
        if not is_nilpotent_mod(array, self.p):
            raise ValueError("the matrix is not nilpotent")
        object.__setattr__(self, "matrix", tuple(tuple(int(v) for v in row) for row in array))

    @classmethod
    def zero(cls, n: int, p: int) -> NilpotentMatrix:
        """The zero matrix."""
        return cls(tuple((0,) * n for _ in range(n)), p)

    @classmethod
    def unit(cls, grp: BlockUnipotentGroup, g: Coordinate) -> NilpotentMatrix:
        """The elementary matrix :math:`E_g` of a generator of ``grp``."""
        return cls.from_coordinates(grp, {g: 1})

    @classmethod
    def from_coordinates(
        cls, grp: BlockUnipotentGroup, values: Mapping[Coordinate, int]
    ) -> NilpotentMatrix:
        """The element :math:`\\sum_g c_g E_g` of the Lie algebra of ``grp``."""
        array = np.zeros((grp.n, grp.n), dtype=np.int64)
        for g, value in values.items():
            g = grp.check_generator(g)
            array[g.row, g.col] = value % grp.p
        return cls(tuple(map(tuple, array.tolist())), grp.p)

    @classmethod
    def from_array(cls, array: Any, p: int) -> NilpotentMatrix:
        """Wraps an integer array."""
        return cls(tuple(map(tuple, np.asarray(array, dtype=np.int64).tolist())), p)

    @property
    def n(self) -> int:
        """The matrix size."""
        return len(self.matrix)

    @property
    def array(self) -> np.ndarray:
        """The matrix as an ``int64`` array."""
        return np.array(self.matrix, dtype=np.int64).reshape(self.n, self.n)

    @property
    def nilpotency_index(self) -> int:
        """The least ``k`` with :math:`x^k = 0`."""
        power = np.eye(self.n, dtype=np.int64)
        for k in range(self.n + 1):
            if not power.any():
                return k
            power = np.mod(power @ self.array, self.p)
        return self.n

    def is_zero(self) -> bool:
        """Whether all entries vanish."""
        return not any(any(row) for row in self.matrix)

    def lies_in(self, grp: BlockUnipotentGroup) -> bool:
        """Whether this is an element of the Lie algebra :math:`\\mathfrak{u}` of ``grp``."""
        if grp.n != self.n or grp.p != self.p:
            return False
        return all(
            grp.is_generator(Coordinate(i, j))
            for i, row in enumerate(self.matrix)
            for j, v in enumerate(row)
            if v
        )

    def coordinates(self, grp: BlockUnipotentGroup) -> dict[Coordinate, int]:
        """The entries at the generator positions of ``grp``."""
        return {g: self.matrix[g.row][g.col] for g in grp.generators}

    def _check(self, other: NilpotentMatrix) -> None:
        if self.p != other.p:
            raise ContextError(f"mixed moduli {self.p} and {other.p}")
        if self.n != other.n:
            raise ContextError(f"sizes {self.n} and {other.n} differ")

    def __add__(self, other: NilpotentMatrix) -> NilpotentMatrix:
        if not isinstance(other, NilpotentMatrix):
            return NotImplemented
        self._check(other)
        return NilpotentMatrix.from_array(self.array + other.array, self.p)

    def __sub__(self, other: NilpotentMatrix) -> NilpotentMatrix:
        if not isinstance(other, NilpotentMatrix):
            return NotImplemented
        self._check(other)
        return NilpotentMatrix.from_array(self.array - other.array, self.p)

    def __neg__(self) -> NilpotentMatrix:
        return NilpotentMatrix.from_array(-self.array, self.p)

    def __mul__(self, scalar: int) -> NilpotentMatrix:
        if not isinstance(scalar, (int, np.integer)):
            return NotImplemented
        return NilpotentMatrix.from_array(int(scalar) * self.array, self.p)

    __rmul__ = __mul__

    def to_json(self) -> dict[str, Any]:
        """Returns ``{"p": ..., "n": ..., "matrix": [row-major ints]}``."""
        return {"p": self.p, "n": self.n, "matrix": [v for row in self.matrix for v in row]}

    @classmethod
    def from_json(cls, data: Mapping[str, Any]) -> NilpotentMatrix:
        """Parses the output of :meth:`to_json`."""
        return cls.from_array(_unflatten(data["matrix"], int(data["n"])), int(data["p"]))

    @staticmethod
    def _commute_(a: NilpotentMatrix, b: NilpotentMatrix) -> bool:
        a._check(b)
        return not bracket(a, b).any()


def bracket(x: NilpotentMatrix, y: NilpotentMatrix) -> np.ndarray:
    """The associative commutator :math:`xy - yx` as a residue array."""
    x._check(y)
    return bracket_mod(x.array, y.array, x.p)


def _unflatten(values: Sequence[int], n: int) -> list[list[int]]:
    values = [int(v) for v in values]
    if len(values) != n * n:
        raise ValueError(f"expected {n * n} row-major entries, got {len(values)}")
    return [values[i * n : (i + 1) * n] for i in range(n)]


class CommutingTuple:
    """A tuple :math:`(x_0, \\ldots, x_{r-1})` of pairwise commuting elements of the Lie algebra.

    .. doctest::
        >>> from unipotent_lifts.exponential import CommutingTuple, NilpotentMatrix
        >>> from unipotent_lifts.unipotent import Y, make_group
        >>> grp = make_group([1, 1, 1], 5)
        >>> x, z = NilpotentMatrix.unit(grp, Y(1, 2)), NilpotentMatrix.unit(grp, Y(1, 3))
        >>> pair = CommutingTuple(grp, [x, z])
        >>> len(pair)
        2

    Args:
        group: the group whose Lie algebra contains the entries.
        entries: the matrices.

    Raises:
        ValueError: if an entry does not lie in the Lie algebra of ``group``.
        NonCommutingError: if two entries do not commute.
    """

    __slots__ = ("_entries", "_group")

    def __init__(self, group: BlockUnipotentGroup, entries: Iterable[NilpotentMatrix]) -> None:
        self._group = group
        self._entries = tuple(entries)
        for k, x in enumerate(self._entries):
            if not x.lies_in(group):
                raise ValueError(f"entry {k} does not lie in the Lie algebra of {group}")
        clash = commute_pairwise(self._entries)
        if clash is not None:
            raise NonCommutingError(f"entries {clash[0]} and {clash[1]} do not commute")

    @classmethod
    def _trusted(
        cls, group: BlockUnipotentGroup, entries: Iterable[NilpotentMatrix]
    ) -> CommutingTuple:
        obj = cls.__new__(cls)
        obj._group = group
        obj._entries = tuple(entries)
        return obj

    @classmethod
    def zero(cls, group: BlockUnipotentGroup, r: int) -> CommutingTuple:
        """The tuple of ``r`` zero matrices."""
        return cls._trusted(group, [NilpotentMatrix.zero(group.n, group.p)] * r)

    @property
    def group(self) -> BlockUnipotentGroup:
        """The ambient group."""
        return self._group

    @property
    def entries(self) -> tuple[NilpotentMatrix, ...]:
        """The matrices :math:`x_0, x_1, \\ldots`."""
        return self._entries

    @property
    def p(self) -> int:
        """The characteristic."""
        return self._group.p

    def __len__(self) -> int:
        return len(self._entries)

    def __iter__(self) -> Iterator[NilpotentMatrix]:
        return iter(self._entries)

    def __getitem__(self, index: int) -> NilpotentMatrix:
        return self._entries[index]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, CommutingTuple):
            return NotImplemented
        return self._group == other._group and self._entries == other._entries

    def __hash__(self) -> int:
        return hash((self._group, self._entries))

    def __repr__(self) -> str:
        return f"CommutingTuple({self._group}, {[list(map(list, x.matrix)) for x in self]})"

    def pad(self, r: int) -> CommutingTuple:
        """Appends zero matrices up to length ``r``.

        Raises:
            ValueError: if the tuple is longer than ``r`` and its tail is nonzero.
        """
        if len(self) > r:
            if any(not x.is_zero() for x in self._entries[r:]):
                raise ValueError(f"cannot shorten a tuple with nonzero entries past position {r}")
            return CommutingTuple._trusted(self._group, self._entries[:r])
        zero = NilpotentMatrix.zero(self._group.n, self.p)
        return CommutingTuple._trusted(self._group, self._entries + (zero,) * (r - len(self)))

    def to_json(self) -> dict[str, Any]:
        """Returns ``{"p", "n", "blocks", "entries": [[row-major ints], ...]}``."""
        return {
            "p": self.p,
            "n": self._group.n,
            "blocks": list(self._group.blocks),
            "entries": [[v for row in x.matrix for v in row] for x in self._entries],
        }

    @classmethod
    def from_json(cls, data: Mapping[str, Any]) -> CommutingTuple:
        """Parses the output of :meth:`to_json`.

        The ``"blocks"`` key is optional; without it the entries are read in the Lie algebra of
        the strictly upper unitriangular group ``[1] * n``.

        Raises:
            ValueError: on malformed input.
        """
        try:
            p = int(data["p"])
            n = int(data["n"])
            blocks = data.get("blocks", [1] * n)
            group = make_group([int(b) for b in blocks], p)
            entries = [NilpotentMatrix.from_array(_unflatten(x, n), p) for x in data["entries"]]
        except (KeyError, TypeError) as exc:
            raise ValueError(f"malformed commuting tuple: {exc}") from exc
        if group.n != n:
            raise ValueError(f"blocks {group.blocks} do not add up to n={n}")
        return cls(group, entries)
