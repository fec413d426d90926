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


"""The result record of an oracle run."""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Any

logger = logging.getLogger(__name__)


@dataclass
class EnumerationReport:
    """Counts and counterexamples collected while checking one instance.

    ``failures`` is empty exactly when the checked statement holds on the instance. Reports of
    disjoint chunks of the same instance combine with :meth:`merge`, which is associative.

    .. doctest::
        >>> from unipotent_lifts.oracle import EnumerationReport
        >>> a = EnumerationReport("bijection", {"p": 5}, counts={"tuples": 2})
        >>> b = EnumerationReport("bijection", {"p": 5}, counts={"tuples": 3})
        >>> a.merge(b).counts
        {'tuples': 5}

    Args:
        check: the name of the check.
        instance: the instance description, e.g. blocks, ``p`` and ``r``.
        counts: named counters.
        failures: counterexample payloads.
        seed: the seed of any random choices, or ``None``.
        wall_time: seconds spent.
    """

    check: str
    instance: dict[str, Any]
    counts: dict[str, int] = field(default_factory=dict)
    failures: list[dict[str, Any]] = field(default_factory=list)
    seed: int | None = None
    wall_time: float = 0.0

    @property
    def ok(self) -> bool:
        """Whether no failure was recorded."""
        return not self.failures

    def count(self, name: str, increment: int = 1) -> None:
        """Increments a counter."""
        self.counts[name] = self.counts.get(name, 0) + increment

    def fail(self, reason: str, **payload: Any) -> None:
        """Records a counterexample."""
        logger.warning("%s failure on %s: %s", self.check, self.instance, reason)
        self.failures.append({"reason": reason, **payload})

    def merge(self, other: EnumerationReport) -> EnumerationReport:
        """Combines the reports of two chunks of the same instance.

        Raises:
            ValueError: if the reports describe different checks or instances.
        """
        if (self.check, self.instance) != (other.check, other.instance):
            raise ValueError("cannot merge reports of different instances")
        return EnumerationReport(
            self.check,
            dict(self.instance),
            {
                name: self.counts.get(name, 0) + other.counts.get(name, 0)
                for name in dict.fromkeys([*self.counts, *other.counts])
            },
            self.failures + other.failures,
            self.seed if self.seed is not None else other.seed,
            self.wall_time + other.wall_time,
        )

    def to_json(self) -> dict[str, Any]:
        """Returns the report as a JSON-serializable dictionary."""
        return {
            "check": self.check,
            "instance": self.instance,
            "ok": self.ok,
            "counts": dict(sorted(self.counts.items())),
            "failures": self.failures,
            "seed": self.seed,
            "wall_time": round(self.wall_time, 3),
        }

    @classmethod
    def from_json(cls, data: dict[str, Any]) -> EnumerationReport:
        """Parses the output of :meth:`to_json`."""
        return cls(
            data["check"],
            dict(data["instance"]),
            {k: int(v) for k, v in data.get("counts", {}).items()},
            list(data.get("failures", [])),
            data.get("seed"),
            float(data.get("wall_time", 0.0)),
        )
