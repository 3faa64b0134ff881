"""The bundled verification suite: table freezes, runner, reporting."""

import json

import pytest

import axetlab.papersuite as ps
from axetlab.catalog import (make_orthogonal_branch, make_Q2_third,
                             make_Q2x_plus_one)
from axetlab.scalars import QQ


def frozen_tables():
    return [
        (make_Q2_third(QQ), ps.Q2_THIRD_EXPECTED),
        (make_Q2x_plus_one().algebra, ps.Q2X_PLUS_ONE_EXPECTED),
        (make_orthogonal_branch(QQ).algebra, ps.ORTHOGONAL_BRANCH_EXPECTED),
    ]


def test_pristine_tables_have_no_mismatches():
    for algebra, expected in frozen_tables():
        assert ps.table_mismatches(algebra, expected) == []


def test_every_coefficient_mutation_is_detected():
    for algebra, expected in frozen_tables():
        n = algebra.dim
        for i in range(n):
            for j in range(i, n):
                for k in range(n):
                    bad = ps.table_mismatches(
                        ps.perturbed(algebra, i, j, k), expected)
                    pair = "(%s, %s)" % (algebra.basis_names[i],
                                         algebra.basis_names[j])
                    assert bad == [pair], (i, j, k, bad)


def test_perturbed_leaves_original_alone():
    A = make_Q2_third()
    _ = ps.perturbed(A, 0, 2, 0)
    assert ps.table_mismatches(A, ps.Q2_THIRD_EXPECTED) == []


def test_suite_char0_green():
    report = ps.run_suite(0)
    assert report.passed
    statuses = {i.name: i.status for i in report.items}
    assert statuses["table-Q2-third"] == "pass"
    assert statuses["replay-orthogonal"] == "pass"
    assert statuses["dichotomy-char0"] == "pass"
    assert statuses["table-Q2x-plus-one"] == "skip"
    skips = [i for i in report.items if i.status == "skip"]
    assert all(i.detail == "characteristic 5 only" for i in skips)
    assert sum(1 for i in report.items if i.status == "pass") == 28
    assert len(skips) == 10


def test_suite_char5_green():
    report = ps.run_suite(5)
    assert report.passed
    statuses = {i.name: i.status for i in report.items}
    assert statuses["table-Q2x-plus-one"] == "pass"
    assert statuses["quotient-pipeline"] == "pass"
    assert statuses["replay-orthogonal-F5"] == "pass"
    assert statuses["table-Q2-third"] == "skip"
    assert sum(1 for i in report.items if i.status == "pass") == 14
    assert sum(1 for i in report.items if i.status == "skip") == 24


def test_suite_rejects_other_characteristics():
    with pytest.raises(ValueError):
        ps.run_suite(3)
    with pytest.raises(ValueError):
        ps.run_suite(7)


def test_suite_is_deterministic():
    assert ps.run_suite(0).to_text() == ps.run_suite(0).to_text()
    assert ps.run_suite(5).to_json() == ps.run_suite(5).to_json()


def test_text_report_shape():
    report = ps.run_suite(5)
    lines = report.to_text().splitlines()
    assert lines[0] == "verification suite, characteristic 5"
    assert lines[-1] == "14 passed, 0 failed, 24 skipped"
    assert len(lines) == len(report.items) + 2


def test_json_report_shape():
    report = ps.run_suite(0)
    data = json.loads(report.to_json())
    assert data["characteristic"] == 0
    assert data["passed"] is True
    assert len(data["items"]) == len(ps.SUITE)
    for item in data["items"]:
        assert set(item) == {"name", "status", "detail"}


def test_failing_check_is_recorded_not_raised(monkeypatch):
    def boom():
        raise ValueError("synthetic failure")

    monkeypatch.setattr(ps, "SUITE", (
        ("synthetic", (0,), boom),
        ("elsewhere", (5,), boom),
    ))
    report = ps.run_suite(0)
    assert not report.passed
    assert report.items[0].status == "fail"
    assert report.items[0].detail == "ValueError: synthetic failure"
    assert report.items[1].status == "skip"
    assert report.to_text().splitlines()[-1] == "0 passed, 1 failed, 1 skipped"


def test_mutated_table_turns_an_item_red(monkeypatch):
    def check_mutated():
        bad = ps.table_mismatches(ps.perturbed(make_Q2_third(), 0, 2, 0),
                                  ps.Q2_THIRD_EXPECTED)
        if bad:
            raise ValueError("mismatched entries at %s" % ", ".join(bad))
        return ps._result("table-Q2-third")

    monkeypatch.setattr(ps, "SUITE", (("table-Q2-third", (0,),
                                       check_mutated),))
    report = ps.run_suite(0)
    assert not report.passed
    assert "(s1, d1)" in report.items[0].detail
