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

"""Irreducible root systems in the simple-root basis."""

from __future__ import annotations

import logging
from collections.abc import Sequence
from dataclasses import dataclass
from functools import cache
from typing import Any

import numpy as np

logger = logging.getLogger(__name__)

Root = tuple[int, ...]

FAMILIES = ("A", "B", "C", "D", "E", "F", "G")

_BAD_PRIMES: dict[str, frozenset[int]] = {
    "A": frozenset(),
    "B": frozenset({2}),
    "C": frozenset({2}),
    "D": frozenset({2}),
    "E6": frozenset({2, 3}),
    "E7": frozenset({2, 3}),
    "E8": frozenset({2, 3, 5}),
    "F": frozenset({2, 3}),
    "G": frozenset({2, 3}),
}

_TORSION_PRIMES: dict[str, frozenset[int]] = {
    "A": frozenset(),
    "B": frozenset({2}),
    "C": frozenset(),
    "D": frozenset({2}),
    "E6": frozenset({2, 3}),
    "E7": frozenset({2, 3}),
    "E8": frozenset({2, 3, 5}),
    "F": frozenset({2, 3}),
    "G": frozenset({2}),
}


def _check_family_rank(family: str, rank: int) -> None:
    if family not in FAMILIES:
        raise ValueError(f"unknown root system family {family!r}, expected one of {FAMILIES}")
    valid = {
        "A": rank >= 1,
        "B": rank >= 2,
        "C": rank >= 2,
        "D": rank >= 4,
        "E": 6 <= rank <= 8,
        "F": rank == 4,
        "G": rank == 2,
    }[family]
    if not isinstance(rank, int) or not valid:
        raise ValueError(f"invalid rank {rank!r} for family {family}")


def cartan_matrix(family: str, rank: int) -> np.ndarray:
    """Returns the Cartan matrix :math:`A_{ij} = \\langle \\alpha_i, \\alpha_j^\\vee \\rangle`.

    Simple roots are numbered as in Bourbaki: in :math:`B_n` the last root is short, in
    :math:`C_n` it is long, in :math:`G_2` the first root is short.
    """
    _check_family_rank(family, rank)
    a = 2 * np.eye(rank, dtype=np.int64)

    def join(i: int, j: int, ij: int = -1, ji: int = -1) -> None:
        a[i, j] = ij
        a[j, i] = ji

    if family in "ABCD":
        for i in range(rank - 1):
            join(i, i + 1)
        if family == "B":
            join(rank - 2, rank - 1, ij=-2, ji=-1)
        elif family == "C":
            join(rank - 2, rank - 1, ij=-1, ji=-2)
        elif family == "D":
            a[rank - 2, rank - 1] = a[rank - 1, rank - 2] = 0
            join(rank - 3, rank - 1)
    elif family == "E":
        # chain 1-3-4-5-..., with node 2 attached to node 4
        chain = [0, *range(2, rank)]
        for i, j in zip(chain, chain[1:], strict=False):
            join(i, j)
        join(1, 3)
    elif family == "F":
        join(0, 1)
        join(1, 2, ij=-2, ji=-1)
        join(2, 3)
    elif family == "G":
        join(0, 1, ij=-1, ji=-3)
    return a


def _positive_roots(cartan: np.ndarray) -> tuple[Root, ...]:
    rank = cartan.shape[0]
    simple = [tuple(int(k == i) for k in range(rank)) for i in range(rank)]
    known: set[Root] = set(simple)
    level = list(simple)
    roots = list(simple)
    while level:
        next_level: list[Root] = []
        for beta in level:
            for i in range(rank):
                pairing = sum(beta[j] * int(cartan[j, i]) for j in range(rank))
                # length of the i-string below beta
                q = 0
                lowered = list(beta)
                while True:
                    lowered[i] -= 1
                    if tuple(lowered) not in known:
                        break
                    q += 1
                if q - pairing > 0:
                    raised = list(beta)
                    raised[i] += 1
                    candidate = tuple(raised)
                    if candidate not in known:
                        known.add(candidate)
                        next_level.append(candidate)
        next_level.sort()
        roots.extend(next_level)
        level = next_level
    return tuple(sorted(roots, key=lambda beta: (sum(beta), beta)))


@dataclass(frozen=True)
class RootSystem:
    """An irreducible root system, described by its positive roots in the simple-root basis.

    Build instances with :func:`.build_root_system`.

    .. doctest::
        >>> from unipotent_lifts.rootsys import build_root_system
        >>> build_root_system("A", 2).positive_roots
        ((0, 1), (1, 0), (1, 1))
    """

    family: str
    """The family letter, one of ``A`` to ``G``."""

    rank: int
    """The number of simple roots."""

    positive_roots: tuple[Root, ...]
    """The positive roots, ordered by height and then lexicographically."""

    @property
    def label(self) -> str:
        """The Cartan type, e.g. ``"E8"``."""
        return f"{self.family}{self.rank}"

    @property
    def simple_roots(self) -> tuple[Root, ...]:
        """The simple roots :math:`\\alpha_1, \\dots, \\alpha_n` as unit vectors."""
        return tuple(
            tuple(int(k == i) for k in range(self.rank)) for i in range(self.rank)
        )

    @property
    def num_positive_roots(self) -> int:
        """:math:`|\\Phi^+|`."""
        return len(self.positive_roots)

    @property
    def highest_root(self) -> Root:
        """The unique root of maximal height."""
        return self.positive_roots[-1]

    def height(self, beta: Sequence[int]) -> int:
        """The height :math:`\\sum_i n_i` of :math:`\\beta = \\sum_i n_i \\alpha_i`."""
        return int(sum(beta))

    def is_root(self, beta: Sequence[int]) -> bool:
        """Whether ``beta`` is a (positive or negative) root."""
        beta = tuple(int(b) for b in beta)
        return beta in self._root_set or tuple(-b for b in beta) in self._root_set

    @property
    def _root_set(self) -> frozenset[Root]:
        return _root_set(self.positive_roots)

    def to_json(self) -> dict[str, Any]:
        """Returns ``{"family": ..., "rank": ...}``."""
        return {"family": self.family, "rank": self.rank}


@cache
def _root_set(roots: tuple[Root, ...]) -> frozenset[Root]:
    return frozenset(roots)


@cache
def build_root_system(family: str, rank: int) -> RootSystem:
    """Builds the positive roots of the irreducible root system of type ``family``, ``rank``.

    Roots are generated level by level from the Cartan matrix using root strings.

    Raises:
        ValueError: if the family is unknown or the rank invalid for it.
    """
    family = family.upper()
    _check_family_rank(family, rank)
    roots = _positive_roots(cartan_matrix(family, rank))
    logger.debug("built %s%d with %d positive roots", family, rank, len(roots))
    return RootSystem(family=family, rank=rank, positive_roots=roots)


def _table_key(rs: RootSystem) -> str:
    return rs.label if rs.family == "E" else rs.family


def is_good_prime(rs: RootSystem, p: int) -> bool:
    """Whether ``p`` is a good prime for ``rs``.

    Type :math:`A` has no bad primes; :math:`B, C, D` need :math:`p > 2`; :math:`E_6, E_7, F_4, G_2`
    need :math:`p > 3`; :math:`E_8` needs :math:`p > 5`.

    .. doctest::
        >>> from unipotent_lifts.rootsys import build_root_system, is_good_prime
        >>> is_good_prime(build_root_system("E", 8), 5)
        False
    """
    return p not in _BAD_PRIMES[_table_key(rs)]


def is_torsion_prime(rs: RootSystem, p: int) -> bool:
    """Whether ``p`` is a torsion prime of the simply connected group of type ``rs``.

    :math:`A` and :math:`C` have none; :math:`B_n` (:math:`n \\ge 3`), :math:`D` and :math:`G_2`
    have 2; :math:`E_6, E_7, F_4` have 2 and 3; :math:`E_8` has 2, 3 and 5.
    """
    if rs.family == "B" and rs.rank == 2:
        return False
    return p in _TORSION_PRIMES[_table_key(rs)]


def coxeter_number(rs: RootSystem) -> int:
    """Returns the Coxeter number, the height of the highest root plus one."""
    return rs.height(rs.highest_root) + 1
