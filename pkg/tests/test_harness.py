import csv
import io
import json

import pytest

from matchcover.corpus import CorpusSource
from matchcover.families import complete, petersen, wheel
from matchcover.graph6 import to_graph6
from matchcover.harness import (
    CLAIMS,
    Outcome,
    all_solitary_graphs,
    emit_report,
    load_report,
    recheck_counterexample,
    verify_claim,
    verify_main_theorem,
)
from matchcover.structure import is_brick, is_wheel


def _not_a_wheel(g):
    # a deliberately false claim, to exercise the failure path
    if not is_brick(g):
        return Outcome("skip", ["skipped: not a brick"])
    if is_wheel(g):
        return Outcome("ok", ["brick"])
    return Outcome("fail", ["brick"], {}, "brick that is not a wheel")


@pytest.fixture
def false_claim(monkeypatch):
    monkeypatch.setitem(CLAIMS, "every-brick-is-a-wheel", ("every brick is a wheel", lambda: _not_a_wheel))
    return "every-brick-is-a-wheel"


def test_wheels_pass_main_theorem():
    r = verify_main_theorem(CorpusSource.from_families([("wheel", 6), ("wheel", 8)]))
    assert r.passed
    assert r.counts["wheel"] == 2
    assert all_solitary_graphs(r) == [to_graph6(wheel(6)), to_graph6(wheel(8))]


def test_petersen_is_outside_the_hypothesis():
    r = verify_main_theorem(CorpusSource.from_graphs([petersen()]))
    assert r.passed
    assert r.counts["skipped: nonsolid brick"] == 1
    assert r.counts["checked"] == 0


def test_k4_is_excluded():
    r = verify_main_theorem(CorpusSource.from_graphs([complete(4)]))
    assert r.passed and r.counts["checked"] == 0


def test_wheel_lemma():
    src = CorpusSource.from_families([("wheel", n) for n in (6, 8, 10, 12)])
    r = verify_claim("lemma-wheel-solitary", src)
    assert r.passed and r.counts["checked"] == 4


def test_extremal_counts():
    src = CorpusSource.from_families([("moebius-ladder", 8), ("moebius-ladder", 12), ("prism", 10)])
    r = verify_claim("lfw2020-extremal", src)
    assert r.passed
    assert [row["bInvariant"] for row in r.per_graph] == [4, 6, 5]


def test_unknown_claim():
    with pytest.raises(KeyError):
        verify_claim("no-such-claim", CorpusSource.from_graphs([]))


def test_failure_carries_recheckable_counterexample(false_claim):
    r = verify_claim(false_claim, CorpusSource.from_families([("wheel", 6), ("petersen", None)]))
    assert not r.passed
    (cx,) = r.counterexamples
    assert recheck_counterexample(false_claim, cx["graph6"])
    assert cx["graph6"] in emit_report(r, "json")


def test_uniqueness_claim_on_c6():
    r = verify_claim("lovasz-uniqueness", CorpusSource.from_families([("cycle", 6), ("prism", 6)]), runs=3)
    assert r.passed
    assert r.counts["has nontrivial tight cut"] == 1


@pytest.fixture(scope="module")
def report():
    return verify_main_theorem(CorpusSource.builtin(6, 4, ["brick"]))


class TestReports:
    def test_text(self, report):
        text = emit_report(report, "text")
        assert "PASS" in text
        assert "read=" in text and "brick=" in text
        assert " s\n" in text

    def test_json_round_trip_is_byte_identical(self, report):
        text = emit_report(report, "json")
        assert emit_report(load_report(text), "json") == text
        data = json.loads(text)
        assert data["schemaVersion"] == 1 and data["verdict"] == "pass"

    def test_csv_rows_agree(self, report):
        rows = list(csv.DictReader(io.StringIO(emit_report(report, "csv"))))
        assert len(rows) == len(report.per_graph)
        assert {r["verdict"] for r in rows} == {"pass"}

    def test_fail_report_in_all_formats(self, false_claim):
        r = verify_claim(false_claim, CorpusSource.from_families([("petersen", None)]))
        assert "FAIL" in emit_report(r, "text")
        assert json.loads(emit_report(r, "json"))["counterexamples"][0]["graph6"] == "IheA@GUAo"
        assert "fail" in emit_report(r, "csv")

    def test_determinism_modulo_timing(self, report):
        again = verify_main_theorem(CorpusSource.builtin(6, 4, ["brick"]))
        assert again.without_timing() == report.without_timing()

    def test_schema_version_checked(self, report):
        data = report.to_dict()
        data["schemaVersion"] = 99
        with pytest.raises(ValueError):
            load_report(json.dumps(data))

    def test_unknown_format(self, report):
        with pytest.raises(ValueError):
            emit_report(report, "xml")


def test_lemmas_on_small_solid_bricks():
    src = CorpusSource.builtin(6, 4, ["brick"])
    for claim in ("lemma-solid-removable-b", "lemma-two-nonremovable", "lemma-two-nonsolitary"):
        assert verify_claim(claim, src).passed


def test_wheel_is_recognised_in_rows():
    r = verify_main_theorem(CorpusSource.from_graphs([wheel(10)]))
    (row,) = r.per_graph
    assert row["wheel"] and row["allSolitary"] and row["bInvariant"] == 9
