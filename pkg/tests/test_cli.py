import json
import subprocess
import sys

import pytest

from sepr.cli import run
from sepr.matrix import identity, save_matrix


def call(capsys, *argv):
    code = run(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.fixture
def i3(tmp_path):
    p = tmp_path / "i3.json"
    save_matrix(identity(3), p)
    return str(p)


def test_compute_sepr(capsys, i3):
    code, out, _ = call(capsys, "compute", i3, "--sepr")
    assert code == 0 and out.strip() == "A+A+A+"


def test_compute_json(capsys, i3):
    code, out, _ = call(capsys, "compute", i3, "--format", "json")
    assert code == 0 and json.loads(out) == {"pr": "0]111", "epr": "AAA", "sepr": "A+A+A+"}


def test_compute_rejects_non_hermitian(capsys, tmp_path):
    p = tmp_path / "broken.json"
    p.write_text(json.dumps({"n": 2, "radicand": 0, "entries": [
        [{"re": ["0", "0"]}, {"re": ["0", "0"], "im": ["1", "0"]}],
        [{"re": ["0", "0"], "im": ["1", "0"]}, {"re": ["0", "0"]}]]}))
    code, out, err = call(capsys, "compute", str(p))
    assert code == 2 and out == "" and "(2, 1)" in err


def test_compute_missing_file(capsys):
    code, _, err = call(capsys, "compute", "/nonexistent/m.json")
    assert code == 2 and err


def test_verify_tables(capsys, tmp_path):
    export = tmp_path / "cat.json"
    code, out, _ = call(capsys, "verify-tables", "--table", "all", "--export", str(export))
    assert code == 0 and out.startswith("3 + 13 + 65 entries verified, 0 mismatches")
    assert len(json.loads(export.read_text())) == 81
    code, out, _ = call(capsys, "verify-tables", "--table", "order2", "--format", "json")
    assert code == 0 and json.loads(out)["total"] == 13


def test_enumerate(capsys):
    code, out, _ = call(capsys, "enumerate", "--order", "2")
    assert code == 0 and "21 candidates, 13 attainable-witnessed" in out
    code, out, _ = call(capsys, "enumerate", "--order", "3", "--class", "real-symmetric", "--format", "json")
    assert code == 0 and json.loads(out)["counts"]["attainable-witnessed"] == 64
    code, _, err = call(capsys, "enumerate", "--order", "9")
    assert code == 2 and "cap" in err


def test_rules(capsys):
    code, out, _ = call(capsys, "rules", "--check", "A*N")
    assert code == 1 and "unattainable" in out and "R3" in out
    code, out, _ = call(capsys, "rules", "--check", "S*A- N", "--format", "json")
    assert code == 0 and json.loads(out)["status"] == "attainable-witnessed"
    code, out, _ = call(capsys, "rules", "--explain", "R7")
    assert code == 0 and "Theorem AXA" in out
    code, _, err = call(capsys, "rules", "--explain", "R99")
    assert code == 2 and "unknown rule" in err
    code, _, err = call(capsys, "rules", "--check", "A%N")
    assert code == 2 and "offset 1" in err
    code, out, _ = call(capsys, "rules", "--format", "json")
    assert code == 0 and len(json.loads(out)) >= 24


def test_check_identities(capsys):
    code, out, _ = call(capsys, "check-identities", "--order", "3", "--trials", "5", "--seed", "1",
                        "--entry-bound", "2", "--radicand", "3", "--format", "json")
    rep = json.loads(out)
    assert code == 0 and rep["ok"] and rep["identities"]["muir"]["checked"] == 5 * 6


def test_search(capsys):
    code, out, _ = call(capsys, "search", "--target", "A+N", "--order", "2", "--budget", "100",
                        "--entries", "integer", "--entry-bound", "1", "--exhaustive", "--class", "real-symmetric")
    assert code == 0 and "witness for A+N" in out
    code, out, _ = call(capsys, "search", "--target", "A*A+", "--budget", "50", "--format", "json")
    assert code == 1 and json.loads(out) == {"target": "A*A+", "found": False}


def test_usage_errors(capsys):
    with pytest.raises(SystemExit) as e:
        run(["compute"])
    assert e.value.code == 2
    with pytest.raises(SystemExit) as e:
        run(["enumerate", "--order", "2", "--bogus"])
    assert e.value.code == 2
    with pytest.raises(SystemExit) as e:
        run(["frobnicate"])
    assert e.value.code == 2


def test_module_entry_point(i3):
    r = subprocess.run([sys.executable, "-m", "sepr", "compute", i3, "--sepr"], capture_output=True, text=True)
    assert r.returncode == 0 and r.stdout.strip() == "A+A+A+"


def test_text_and_json_agree(capsys):
    _, text, _ = call(capsys, "enumerate", "--order", "3")
    _, js, _ = call(capsys, "enumerate", "--order", "3", "--format", "json")
    c = json.loads(js)["counts"]
    assert f"{c['universe']} candidates, {c['attainable-witnessed']} attainable-witnessed" in text
