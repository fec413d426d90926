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

import pytest
from unipotent_lifts.oracle import EnumerationReport


def test_counts_and_failures():
    report = EnumerationReport("bijection", {"blocks": [1, 1, 1], "p": 3, "r": 1})
    assert report.ok
    report.count("tuples")
    report.count("tuples", 4)
    assert report.counts == {"tuples": 5}
    report.fail("mismatch", tuple=[[0, 1, 0, 0]])
    assert not report.ok
    assert report.failures == [{"reason": "mismatch", "tuple": [[0, 1, 0, 0]]}]


def test_merge(subtests):
    instance = {"p": 5}
    a = EnumerationReport("bijection", instance, {"tuples": 2, "pairs": 1}, wall_time=1.0)
    b = EnumerationReport("bijection", instance, {"tuples": 3}, seed=4, wall_time=0.5)
    c = EnumerationReport("bijection", instance, {"round_trips": 1})
    c.fail("broken")

    with subtests.test("sum"):
        merged = a.merge(b)
        assert merged.counts == {"tuples": 5, "pairs": 1}
        assert merged.seed == 4
        assert merged.wall_time == 1.5
        assert merged.ok

    with subtests.test("associative"):
        assert a.merge(b).merge(c) == a.merge(b.merge(c))
        assert not a.merge(c).ok

    with subtests.test("inputs unchanged"):
        a.merge(c)
        assert a.ok
        assert a.counts == {"tuples": 2, "pairs": 1}

    with subtests.test("different instances"), pytest.raises(ValueError):
        a.merge(EnumerationReport("bijection", {"p": 3}))

    with subtests.test("different checks"), pytest.raises(ValueError):
        a.merge(EnumerationReport("classical", instance))


def test_json():
    report = EnumerationReport("surjectivity", {"p": 3}, {"tuples": 9, "morphisms": 9}, seed=1)
    report.wall_time = 0.12345
    data = report.to_json()
    assert data == {
        "check": "surjectivity",
        "instance": {"p": 3},
        "ok": True,
        "counts": {"morphisms": 9, "tuples": 9},
        "failures": [],
        "seed": 1,
        "wall_time": 0.123,
    }
    assert list(data["counts"]) == ["morphisms", "tuples"]
    parsed = EnumerationReport.from_json(data)
    assert parsed.counts == report.counts
    assert parsed.seed == 1
    assert parsed.ok
