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


"""JSON input and output of the command line."""

from __future__ import annotations

import json
import sys
from typing import Any, TextIO


def read_json(path: str | None, stdin: TextIO | None = None) -> Any:
    """Reads a JSON document from ``path``, or from standard input for ``None`` or ``"-"``."""
    if path is None or path == "-":
        return json.load(stdin or sys.stdin)
    with open(path, encoding="utf-8") as handle:
        return json.load(handle)


def write_json(payload: Any, stdout: TextIO | None = None) -> None:
    """Writes one JSON document followed by a newline."""
    out = stdout or sys.stdout
    json.dump(payload, out)
    out.write("\n")


def int_list(text: str) -> list[int]:
    """Parses ``"1,2,3"``; the empty string gives ``[]``."""
    text = text.strip()
    if not text:
        return []
    return [int(part) for part in text.split(",")]


def block_lists(text: str) -> list[list[int]]:
    """Parses ``"1,1,1;2,1"`` into a list of block lists."""
    return [int_list(part) for part in text.split(";") if part.strip()]


def parse_matrix(text: str) -> list[list[int]]:
    """Parses a square matrix given inline as JSON rows, e.g. ``[[1,0],[0,1]]``.

    Raises:
        ValueError: if the text is not a JSON list of integer rows.
    """
    rows = json.loads(text)
    if not isinstance(rows, list) or not all(isinstance(row, list) for row in rows):
        raise ValueError("expected a JSON list of rows")
    return [[int(v) for v in row] for row in rows]
