"""Verdict aggregation and deterministic rendering."""

import pytest

from kanforge.report import Verdict, render_json, render_text, report_merge


def test_merge_empty():
    m = report_merge([])
    assert m["total"] == 0 and m["exit_code"] == 0 and m["failures"] == []


def test_merge_two_passes():
    m = report_merge([Verdict("a", "pass"), Verdict("b", "pass")])
    assert m["summary"] == "2/2" and m["exit_code"] == 0


def test_merge_names_the_failure():
    m = report_merge([Verdict("a", "pass"),
                      Verdict("b", "fail", ("boom",))])
    assert m["exit_code"] == 1 and m["failures"] == ["b"]
    assert "b" in render_text([Verdict("a", "pass"),
                               Verdict("b", "fail", ("boom",))])


def test_na_not_counted_as_checked():
    m = report_merge([Verdict("a", "n/a", ("skipped",))])
    assert m["summary"] == "0/0" and m["exit_code"] == 0


def test_fail_requires_details():
    with pytest.raises(ValueError):
        Verdict("x", "fail")
    with pytest.raises(ValueError):
        Verdict("x", "maybe")


def test_render_deterministic():
    vs = [Verdict("a", "pass", counters=(("n", 3),)),
          Verdict("b", "fail", ("why",))]
    assert render_text(vs) == render_text(list(vs))
    assert render_json(vs) == render_json(list(vs))


def test_json_roundtrip():
    v = Verdict("a", "fail", ("d1", "d2"), (("k", 1),))
    assert Verdict.from_json(v.to_json()) == v
