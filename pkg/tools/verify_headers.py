#!/usr/bin/env python3
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

"""Utility script to verify the license headers of the unipotent-lifts sources."""

import argparse
import multiprocessing
import pathlib
import re
import sys

# regex for character encoding from PEP 263
pep263 = re.compile(r"^[ \t\f]*#.*?coding[:=][ \t]*([-_.a-zA-Z0-9]+)")
line_start = re.compile(r"^# This code is part of unipotent-lifts.$")
copyright_line = re.compile(r"^# \(C\) Copyright the unipotent-lifts developers 20\d\d\.$")

HEADER = """# This code is part of unipotent-lifts.
#
"""
APACHE_TEXT = """#
# This code is licensed under the Apache License, Version 2.0. You may
# obtain a copy of this license in the LICENSE.txt file in the root directory
# of this source tree or at https://www.apache.org/licenses/LICENSE-2.0.
#
# Any modifications or derivative works of this code must retain this
# copyright notice, and modified files need to carry a notice indicating
# that they have been altered from the originals.
"""


def discover_files(code_paths):
    """Find all .py and .sh files in a list of trees"""
    return [
        file
        for extension in ("py", "sh")
        for path in code_paths
        for file in pathlib.Path(path).glob(f"**/*.{extension}")
        if "_build" not in file.parts
    ]


def validate_header(file_path):
    """Validate the header for a single file"""
    with open(file_path, encoding="utf8") as fd:
        lines = fd.readlines()
    start = None
    for index, line in enumerate(lines[:5]):
        if index < 2 and pep263.match(line):
            return file_path, False, "Unnecessary encoding specification (PEP 263, 3120)"
        if line_start.search(line):
            start = index
            break
    if start is None:
        return file_path, False, "Header not found in first 5 lines"

    if "".join(lines[start : start + 2]) != HEADER:
        return file_path, False, f"Header up to copyright line does not match: {HEADER}"
    if start + 2 >= len(lines) or not copyright_line.search(lines[start + 2]):
        return file_path, False, "Header copyright line not found"
    if "".join(lines[start + 3 : start + 11]) != APACHE_TEXT:
        return file_path, False, f"Header apache text string doesn't match:\n {APACHE_TEXT}"
    return file_path, True, None


def _main():
    parser = argparse.ArgumentParser(description="Check file headers.")
    parser.add_argument(
        "paths",
        type=str,
        nargs="+",
        help="Paths to scan",
    )
    args = parser.parse_args()
    files = discover_files(args.paths)
    with multiprocessing.Pool() as pool:
        res = pool.map(validate_header, files)
    failed_files = [x for x in res if x[1] is False]
    if len(failed_files) > 0:
        for failed_file in failed_files:
            sys.stderr.write(f"{failed_file[0]} failed header check because:\n")
            sys.stderr.write(f"{failed_file[2]}\n\n")
        sys.exit(1)
    sys.exit(0)


if __name__ == "__main__":
    _main()
