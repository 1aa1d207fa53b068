import io
import json
import subprocess
import sys

import pytest

from matchcover.cli import main
from matchcover.families import petersen, wheel
from matchcover.graph6 import parse_graph6, read_graph6_lines, to_graph6
from matchcover.harness import CLAIMS, Outcome, load_report
from matchcover.isomorphism import are_isomorphic


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_classify_wheel6(capsys):
    code, out, _ = run(capsys, "classify", "--family", "wheel", "--order", "6")
    assert code == 0
    lines = out.splitlines()
    spokes = [ln for ln in lines if ln.startswith("0-")]
    rims = [ln for ln in lines[2:] if ln and not ln.startswith("0-")]
    assert len(spokes) == 5 and all(ln.split()[1:] == ["1", "yes", "yes", "yes"] for ln in spokes)
    assert len(rims) == 5 and all(ln.split()[1:] == ["2", "no", "no", "no"] for ln in rims)


def test_solid_petersen(capsys):
    code, out, _ = run(capsys, "solid", "--family", "petersen", "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["verdict"] == "NONSOLID"
    assert len(data["cycle1"]) == len(data["cycle2"]) == 5
    assert data["remainderMatching"] == []


def test_solid_on_non_brick_is_usage_error(capsys):
    code, _, err = run(capsys, "solid", "--family", "cycle", "--order", "6")
    assert code == 2
    assert err.startswith("matchcover: error:") and err.count("\n") == 1


def test_verify_file_passes(capsys, tmp_path):
    p = tmp_path / "bricks.g6"
    code, _, _ = run(capsys, "enumerate", "--max-order", "6", "--filter", "brick", "--out", str(p))
    assert code == 0
    code, out, _ = run(capsys, "verify", "--claim", "main-theorem", "--input", str(p))
    assert code == 0 and "PASS" in out


def test_verify_failure_exits_one(capsys, monkeypatch):
    def not_petersen(g):
        return Outcome("fail", [], {}, "rejected") if are_isomorphic(g, petersen()) else Outcome("ok")

    monkeypatch.setitem(CLAIMS, "no-petersen", ("no Petersen graph", lambda: not_petersen))
    code, out, _ = run(capsys, "verify", "--claim", "no-petersen", "--family", "petersen")
    assert code == 1 and "FAIL" in out and "COUNTEREXAMPLE" in out


@pytest.mark.parametrize("argv", [
    ["frobnicate"],
    ["analyze"],
    ["analyze", "--family", "wheel", "--order", "6", "--graph6", "C~"],
    ["analyze", "--graph6", "C~~"],
    ["analyze", "--input", "/nonexistent/file.g6"],
    ["analyze", "--family", "wheel", "--order", "3"],
    ["analyze", "--family", "wheel", "--order", "18"],
    ["enumerate", "--max-order", "9"],
    ["verify", "--claim", "nope", "--family", "petersen"],
    ["classify", "--family", "cycle", "--order", "5"],
    ["analyze", "--family", "petersen", "--bogus"],
])
def test_usage_errors_exit_two(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2
    assert err.startswith("matchcover: error:") and err.count("\n") == 1


def test_malformed_file_names_line(capsys, tmp_path):
    p = tmp_path / "bad.g6"
    p.write_text("C~\nC~~\n")
    code, _, err = run(capsys, "analyze", "--input", str(p))
    assert code == 2 and "bad.g6:2" in err


def test_generate_is_reingestible(capsys):
    code, out, _ = run(capsys, "generate", "--family", "wheel", "--order", "8")
    assert code == 0 and parse_graph6(out.strip()) == wheel(8)


def test_enumerate_is_reingestible(capsys):
    code, out, _ = run(capsys, "enumerate", "--order", "4", "--filter", "brick")
    assert code == 0
    (g,) = read_graph6_lines(io.StringIO(out))
    assert g.m == 6


def test_decompose_leaves_are_reingestible(capsys):
    code, out, _ = run(capsys, "decompose", "--family", "cycle", "--order", "6", "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["bricks"] == 0
    assert [parse_graph6(leaf["graph6"]).n for leaf in data["leaves"]] == [4, 4]


def test_analyze_text_and_json(capsys):
    code, out, _ = run(capsys, "analyze", "--graph6", to_graph6(petersen()))
    assert code == 0 and "brick" in out
    code, out, _ = run(capsys, "analyze", "--family", "wheel", "--order", "8", "--format", "json")
    data = json.loads(out)
    assert data["brick"] and data["solid"] and data["wheel"] and data["bricks"] == 1


def test_json_report_to_file_is_loadable(capsys, tmp_path):
    p = tmp_path / "r.json"
    code, out, _ = run(capsys, "verify", "--claim", "lemma-wheel-solitary", "--family", "wheel",
                       "--order", "10", "--format", "json", "--out", str(p))
    assert code == 0 and "PASS" in out
    report = load_report(p.read_text())
    assert report.passed and report.claim_id == "lemma-wheel-solitary"


def test_json_report_default_name(capsys, tmp_path, monkeypatch):
    monkeypatch.chdir(tmp_path)
    code, _, _ = run(capsys, "verify", "--family", "wheel", "--order", "6", "--format", "csv")
    assert code == 0
    (f,) = list(tmp_path.glob("main-theorem-*.csv"))
    assert f.read_text().startswith("claimId,verdict")


def test_stdin_and_console_entry(tmp_path):
    proc = subprocess.run(
        [sys.executable, "-m", "matchcover", "analyze", "--input", "-", "--format", "json"],
        input="C~\n", capture_output=True, text=True, check=False,
    )
    assert proc.returncode == 0, proc.stderr
    assert json.loads(proc.stdout)["brick"] is True
