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

"""Square matrices with entries in a commutative ring."""

from __future__ import annotations

from collections.abc import Callable, Iterable, Iterator
from operator import add, sub
from typing import Any, Generic, TypeVar

import numpy as np

R = TypeVar("R")
S = TypeVar("S")


class RingMatrix(Generic[R]):
    """An immutable square matrix over polynomials (or any commutative ring).

    Entries only need ``+``, ``-`` and ``*`` among themselves and multiplication by integers, so
    the same class carries generic group elements over :class:`.MultiPoly` and exponentials over
    :class:`.Poly` or :class:`.TruncatedPoly`.

    .. doctest::
        >>> from unipotent_lifts.arith import Poly, RingMatrix
        >>> t = Poly([0, 1], 5)
        >>> m = RingMatrix.from_array([[0, 1], [0, 0]], t) + RingMatrix.identity(2, Poly.one(5))
        >>> print((m @ m)[0, 1])
        2*t

    Args:
        rows: the rows of the matrix.
    """

    __slots__ = ("_rows",)

    def __init__(self, rows: Iterable[Iterable[R]]) -> None:
        self._rows: tuple[tuple[R, ...], ...] = tuple(tuple(row) for row in rows)
        if any(len(row) != len(self._rows) for row in self._rows):
            raise ValueError("a RingMatrix must be square")

    @classmethod
    def identity(cls, n: int, one: R) -> RingMatrix[R]:
        """Returns the identity matrix with diagonal ``one`` (off-diagonal ``0 * one``)."""
        zero = 0 * one  # type: ignore[operator]
        return cls([[one if i == j else zero for j in range(n)] for i in range(n)])

    @classmethod
    def from_array(cls, array: Any, scalar: R) -> RingMatrix[R]:
        """Returns ``scalar * array`` for an integer matrix ``array``."""
        values = np.asarray(array, dtype=object)
        return cls([[int(v) * scalar for v in row] for row in values])  # type: ignore[operator]

    @property
    def n(self) -> int:
        """The matrix size."""
        return len(self._rows)

    @property
    def rows(self) -> tuple[tuple[R, ...], ...]:
        """The rows of the matrix."""
        return self._rows

    def __getitem__(self, index: tuple[int, int]) -> R:
        i, j = index
        return self._rows[i][j]

    def entries(self) -> Iterator[tuple[int, int, R]]:
        """Iterates over ``(row, col, entry)`` in row-major order."""
        for i, row in enumerate(self._rows):
            for j, entry in enumerate(row):
                yield i, j, entry

    def map(self, func: Callable[[R], S]) -> RingMatrix[S]:
        """Applies ``func`` entrywise."""
        return RingMatrix([[func(entry) for entry in row] for row in self._rows])

    def _check(self, other: RingMatrix[Any]) -> None:
        if other.n != self.n:
            raise ValueError(f"size mismatch: {self.n} and {other.n}")

    def __matmul__(self, other: RingMatrix[R]) -> RingMatrix[R]:
        if not isinstance(other, RingMatrix):
            return NotImplemented
        self._check(other)
        n = self.n
        columns = list(zip(*other._rows, strict=True))
        rows = []
        for row in self._rows:
            new_row = []
            for column in columns:
                acc = row[0] * column[0]  # type: ignore[operator]
                for k in range(1, n):
                    acc = acc + row[k] * column[k]  # type: ignore[operator]
                new_row.append(acc)
            rows.append(new_row)
        return RingMatrix(rows)

    def _combine(self, other: RingMatrix[R], op: Callable[[Any, Any], Any]) -> RingMatrix[R]:
        self._check(other)
        return RingMatrix(
            [
                [op(a, b) for a, b in zip(r1, r2, strict=True)]
                for r1, r2 in zip(self._rows, other._rows, strict=True)
            ]
        )

    def __add__(self, other: RingMatrix[R]) -> RingMatrix[R]:
        if not isinstance(other, RingMatrix):
            return NotImplemented
        return self._combine(other, add)

    def __sub__(self, other: RingMatrix[R]) -> RingMatrix[R]:
        if not isinstance(other, RingMatrix):
            return NotImplemented
        return self._combine(other, sub)

    def __neg__(self) -> RingMatrix[R]:
        return self.map(lambda entry: -entry)  # type: ignore[operator]

    def __mul__(self, scalar: Any) -> RingMatrix[R]:
        return self.map(lambda entry: entry * scalar)

    __rmul__ = __mul__

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, RingMatrix):
            return NotImplemented
        return self._rows == other._rows

    def __hash__(self) -> int:
        return hash(self._rows)

    def __repr__(self) -> str:
        return f"RingMatrix({[list(row) for row in self._rows]!r})"

    def __str__(self) -> str:
        return "\n".join("[" + ", ".join(str(entry) for entry in row) + "]" for row in self._rows)
