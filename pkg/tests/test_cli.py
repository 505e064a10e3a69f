import json
import subprocess
import sys

import pytest

from neutromap.cli import main
from neutromap.models import load_fixture


def call(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def run_json(capsys, *argv):
    code, out, err = call(capsys, "run", *argv, "--format", "json")
    assert code == 0, err
    return json.loads(out)


def test_run_fcm_limit_cycle(capsys):
    doc = run_json(capsys, "--engine", "fcm", "--model", "socio-economic", "--on", "C1")
    assert doc["classification"] == "LIMIT_CYCLE" and doc["period"] == 4
    assert doc["states"][0] == doc["seed"] == [1, 0, 0, 0, 0]
    assert doc["raw"][0] == [0, 0, -1, 0, 1]
    assert len(doc["hidden_pattern"]) == 4
    for key in ("engine", "model", "side", "iterations", "cycle_start"):
        assert key in doc


def test_run_ncm_fixed_point(capsys):
    doc = run_json(capsys, "--engine", "ncm", "--model", "child-labor-ncm", "--on", "C1")
    assert doc["hidden_pattern"] == [["1", "I", "0", "1", "1", "0", "0"]]
    assert doc["raw"][1][0] == "2+I" and doc["raw"][1][2] == "-1+I"


def test_run_frm_and_nrm_pairs(capsys):
    doc = run_json(capsys, "--engine", "frm", "--model", "teacher-frm", "--on", "1")
    assert doc["hidden_pattern"] == [{"domain": [1, 0, 0, 1, 0], "range": [1, 0, 0]}]
    doc = run_json(capsys, "--engine", "nrm", "--model", "teacher-nrm", "--on", "1")
    assert doc["hidden_pattern"][0]["range"] == ["1", "I", "I"]
    doc = run_json(capsys, "--engine", "frm", "--model", "teachers-frm-m1", "--on", "7", "--side", "range")
    assert doc["hidden_pattern"][0]["domain"] == [1] * 8


def test_run_fuzzy_seed_vector(capsys):
    doc = run_json(capsys, "--engine", "fuzzy", "--model", "educated-fuzzy", "--seed", "1,0,0,0,0,1,0,0,0")
    assert doc["mode"] == "bipartite"
    assert doc["states"][0]["range"] == ["0.8", "0.8", "0.9", "0.6", "0.4", "0.6", "0.9", "0.8",
                                          0, 0, 0, "0.6", "0.8", "0.8"]


def test_human_output(capsys):
    code, out, _ = call(capsys, "run", "--engine", "fcm", "--model", "socio-economic", "--on", "C1")
    assert code == 0
    assert out.startswith("neutromap ")
    assert "LIMIT_CYCLE period 4" in out


def test_output_is_deterministic(capsys):
    argv = ("run", "--engine", "ncm", "--model", "public-ncm", "--on", "1", "--format", "json")
    first = call(capsys, *argv)
    assert call(capsys, *argv) == first


@pytest.mark.parametrize("argv", [
    ("run", "--engine", "fcm", "--model", "socio-economic", "--on", "NOPE"),
    ("run", "--engine", "fcm", "--model", "socio-economic"),
    ("run", "--engine", "fcm", "--model", "socio-economic", "--seed", "1,0"),
    ("run", "--engine", "fcm", "--model", "socio-economic", "--seed", "1,0,0,0,I"),
    ("run", "--engine", "frm", "--model", "socio-economic", "--on", "C1"),
    ("run", "--engine", "fcm", "--model", "no-such-model", "--on", "C1"),
    ("run", "--engine", "quantum", "--model", "socio-economic", "--on", "C1"),
    ("frobnicate",),
    ("sutra", "square5", "14"),
    ("sutra", "nosuch", "1"),
    ("sutra", "urdhva", "1"),
    ("sutra", "ekadhika", "17"),
])
def test_request_errors_exit_3(capsys, argv):
    code, _, err = call(capsys, *argv)
    assert code == 3
    assert err


def test_cap_exceeded_exits_2(capsys):
    code, _, err = call(capsys, "run", "--engine", "fcm", "--model", "socio-economic",
                        "--on", "C1", "--max-iterations", "2")
    assert code == 2 and "2" in err


def test_invalid_model_exits_1(capsys, tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps({"kind": "fcm", "row_concepts": ["a", "b"], "matrix": [[1, 1], [0, 0]]}))
    code, _, err = call(capsys, "run", "--engine", "fcm", "--model", str(bad), "--on", "a")
    assert code == 1 and "row 1, column 1" in err
    empty = tmp_path / "empty.json"
    empty.write_text(json.dumps({"kind": "fcm", "row_concepts": [], "matrix": []}))
    assert call(capsys, "enumerate", "--engine", "fcm", "--model", str(empty))[0] == 1


def test_combine(capsys, tmp_path, fixture_path):
    experts = [str(fixture_path(f"public-m{k}")) for k in range(1, 11)]
    code, out, _ = call(capsys, "combine", *experts)
    assert code == 0
    assert out == fixture_path("public-combined-M").read_text()
    target = tmp_path / "n.json"
    assert call(capsys, "combine", "--mode", "average", *experts, "-o", str(target))[0] == 0
    assert target.read_text() == fixture_path("public-combined-N").read_text()
    code, _, _ = call(capsys, "combine", "socio-economic", "teacher-frm")
    assert code == 1


def test_enumerate(capsys):
    code, out, _ = call(capsys, "enumerate", "--engine", "fcm", "--model", "socio-economic", "--format", "json")
    rows = json.loads(out)["rows"]
    assert code == 0 and len(rows) == 5
    code, out, _ = call(capsys, "enumerate", "--engine", "fuzzy", "--model", "public-combined-N", "--format", "json")
    kinds = {r["seed"]: r["classification"] for r in json.loads(out)["rows"]}
    labels = load_fixture("public-combined-N").rows.labels
    assert kinds[labels[1]] == "LIMIT_CYCLE"
    assert kinds[labels[3]] == "FIXED_POINT"


def test_fixtures_listing(capsys):
    code, out, _ = call(capsys, "fixtures", "--format", "json")
    names = {r["name"] for r in json.loads(out)}
    assert code == 0 and "socio-economic" in names and len(names) == 22


def test_env_override(capsys, tmp_path, monkeypatch):
    (tmp_path / "tiny.json").write_text(json.dumps(
        {"kind": "fcm", "row_concepts": ["a", "b"], "matrix": [[0, 1], [0, 0]]}))
    monkeypatch.setenv("NEUTROMAP_FIXTURES", str(tmp_path))
    doc = run_json(capsys, "--engine", "fcm", "--model", "tiny", "--on", "a")
    assert doc["hidden_pattern"] == [[1, 1]]


@pytest.mark.parametrize("argv, want", [
    (("ekadhika", "19"), "052631578947368421 (period 18)"),
    (("ekadhika", "19", "--method", "divide"), "052631578947368421 (period 18)"),
    (("sesanya", "7"), "142857 (period 6)"),
    (("nikhilam", "9", "7", "--base", "10"), "63"),
    (("nikhilam", "96"), "9216"),
    (("urdhva", "12", "13"), "156"),
    (("square5", "15"), "225"),
    (("ekanyuna", "43", "9"), "387"),
    (("firstlast", "27", "87"), "2349"),
    (("firstlast", "47", "97"), "NOT_APPLICABLE"),
    (("paravartya", "x^3+7x^2+6x+5", "x-2"), "Q = x^2+9x+24, R = 53"),
    (("factorq", "2", "5", "2"), "(x+2)(2x+1)"),
    (("hcf", "x^2+7x+6", "x^2-5x-6"), "x+1"),
    (("factor3", "2x^2+7xy+6y^2+11yz+7zx+3z^2"), "(x+2y+3z)(2x+3y+z)"),
    (("sopantya", "2", "1"), "x = -13/3"),
    (("gunita", "x^2+3x+2", "x+1", "x+2"), "true"),
    (("gunita", "--middle", "x+1", "x^3+6x^2+11x+6"), "x^2+5x+6"),
])
def test_sutra_results(capsys, argv, want):
    code, out, err = call(capsys, "sutra", *argv, "--format", "json")
    assert code == 0, err
    assert json.loads(out)["result"] == want


def test_sutra_verify_human(capsys):
    code, out, _ = call(capsys, "sutra", "ekadhika", "19", "--verify")
    assert code == 0
    assert out.splitlines()[-1] == "conventional: 052631578947368421"


def test_sutra_operands_starting_with_minus(capsys):
    code, out, _ = call(capsys, "sutra", "hcf", "--format", "json", "--", "-x^2+1", "x+1")
    assert code == 0 and json.loads(out)["result"] == "x+1"
    code, out, _ = call(capsys, "sutra", "hcf", "x+1", "-x^2+1")
    assert code == 0 and out.strip().endswith("x+1")
    assert call(capsys, "run", "--engine", "fcm", "--model", "socio-economic", "--on", "C1", "--bogus")[0] == 3


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "neutromap", "sutra", "urdhva", "12", "13"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout.strip().endswith("156")
    proc = subprocess.run([sys.executable, "-m", "neutromap", "--version"], capture_output=True, text=True)
    assert proc.stdout.startswith("neutromap ")
