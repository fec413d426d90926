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

"""Parabolic subsets of simple roots and the grading they induce."""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from typing import Any

from .root_system import Root, RootSystem, build_root_system


@dataclass(frozen=True)
class ParabolicDatum:
    """A subset :math:`J` of the simple roots of a :class:`.RootSystem`.

    ``J`` holds 0-based simple-root indices; the JSON form uses 1-based labels.

    .. doctest::
        >>> from unipotent_lifts.rootsys import ParabolicDatum, build_root_system
        >>> datum = ParabolicDatum.from_labels(build_root_system("A", 3), [2])
        >>> datum.J
        frozenset({1})

    Raises:
        ValueError: if ``J`` is not a subset of the simple roots.
    """

    root_system: RootSystem
    J: frozenset[int]

    def __post_init__(self) -> None:
        J = frozenset(int(i) for i in self.J)
        if any(not 0 <= i < self.root_system.rank for i in J):
            raise ValueError(f"J={sorted(J)} is not a subset of the simple roots")
        object.__setattr__(self, "J", J)

    @classmethod
    def from_labels(cls, root_system: RootSystem, labels: Iterable[int]) -> ParabolicDatum:
        """Builds the datum from 1-based simple-root labels."""
        labels = list(labels)
        if any(label < 1 for label in labels):
            raise ValueError(f"simple-root labels are 1-based, got {labels}")
        return cls(root_system, frozenset(label - 1 for label in labels))

    @property
    def phi_J_positive(self) -> tuple[Root, ...]:
        """:math:`\\Phi_J^+`, the positive roots supported on :math:`J`."""
        return tuple(beta for beta in self.root_system.positive_roots if ht_J(beta, self) == 0)

    @property
    def levi_roots(self) -> tuple[Root, ...]:
        """:math:`\\Phi_J = \\mathbb{Z}J \\cap \\Phi`, positive roots first."""
        positive = self.phi_J_positive
        return positive + tuple(tuple(-b for b in beta) for beta in positive)

    def to_json(self) -> dict[str, Any]:
        """Returns ``{"family", "rank", "J"}`` with 1-based ``J``."""
        return {**self.root_system.to_json(), "J": sorted(i + 1 for i in self.J)}

    @classmethod
    def from_json(cls, data: dict[str, Any]) -> ParabolicDatum:
        """Parses the output of :meth:`to_json`.

        Raises:
            ValueError: on malformed input.
        """
        try:
            rs = build_root_system(str(data["family"]), int(data["rank"]))
            labels = [int(i) for i in data.get("J", [])]
        except (KeyError, TypeError) as exc:
            raise ValueError(f"malformed parabolic datum {data!r}") from exc
        return cls.from_labels(rs, labels)


def ht_J(beta: Sequence[int], datum: ParabolicDatum) -> int:
    """Sums the simple-root coordinates of ``beta`` outside :math:`J`.

    This is linear, so ``beta`` may be any integer combination of simple roots.

    .. doctest::
        >>> from unipotent_lifts.rootsys import ParabolicDatum, build_root_system, ht_J
        >>> a2 = build_root_system("A", 2)
        >>> ht_J((1, 1), ParabolicDatum(a2, frozenset({0})))
        1
    """
    rank = datum.root_system.rank
    if len(beta) != rank:
        raise ValueError(f"{tuple(beta)} is not in simple-root coordinates of rank {rank}")
    return int(sum(b for i, b in enumerate(beta) if i not in datum.J))


def nilpotence_class(datum: ParabolicDatum) -> int:
    """Returns the nilpotence class of the unipotent radical, :math:`\\max_{\\Phi^+} ht_J`."""
    return max((ht_J(beta, datum) for beta in datum.root_system.positive_roots), default=0)


def radical_roots(datum: ParabolicDatum) -> list[Root]:
    """Returns :math:`\\Phi^+ \\setminus \\Phi_J^+` ordered by :math:`ht_J` and coordinates."""
    roots = [beta for beta in datum.root_system.positive_roots if ht_J(beta, datum) > 0]
    return sorted(roots, key=lambda beta: (ht_J(beta, datum), beta))


def parabolic_for_blocks(blocks: Sequence[int]) -> ParabolicDatum:
    """The datum of type :math:`A_{n-1}` realized by block sizes summing to :math:`n`.

    The simple root :math:`\\alpha_i` lies in :math:`J` exactly when positions :math:`i` and
    :math:`i+1` fall into the same block.

    .. doctest::
        >>> from unipotent_lifts.rootsys import parabolic_for_blocks
        >>> parabolic_for_blocks([2, 1]).to_json()
        {'family': 'A', 'rank': 2, 'J': [1]}
    """
    n = sum(blocks)
    if n < 2 or any(b < 1 for b in blocks):
        raise ValueError(f"invalid block sizes {list(blocks)}")
    block_of = [index for index, size in enumerate(blocks) for _ in range(size)]
    J = frozenset(i for i in range(n - 1) if block_of[i] == block_of[i + 1])
    return ParabolicDatum(build_root_system("A", n - 1), J)


def root_for_position(row: int, col: int, n: int) -> Root:
    """The root :math:`\\alpha_{row} + \\dots + \\alpha_{col-1}` of the matrix entry (0-based)."""
    if not 0 <= row < col < n:
        raise ValueError(f"({row}, {col}) is not a position above the diagonal of size {n}")
    return tuple(int(row <= k < col) for k in range(n - 1))
