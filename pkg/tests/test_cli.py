import json
import subprocess
import sys

import pytest

from hopfcalc import catalog
from hopfcalc.cli import EXIT_BAD_INPUT, EXIT_CHECKS_FAILED, EXIT_OK, main
from hopfcalc.hopf import FiniteDimHopf
from hopfcalc.report import CHECKS


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.fixture
def s3_file(tmp_path, capsys):
    path = tmp_path / "s3.json"
    assert run(capsys, "build", "--catalog", "S3", "--out", str(path))[0] == EXIT_OK
    return path


def write(tmp_path, name, doc):
    p = tmp_path / name
    p.write_text(json.dumps(doc) if not isinstance(doc, str) else doc)
    return str(p)


@pytest.mark.parametrize("name, dim, commutative", [
    ("S3", 6, False), ("double:C2", 4, True), ("dual:S3", 6, True),
])
def test_build_catalog(capsys, name, dim, commutative):
    code, out, _ = run(capsys, "build", "--catalog", name)
    assert code == EXIT_OK
    H = FiniteDimHopf.from_json(json.loads(out))
    assert H.dim == dim
    assert H.algebra.is_commutative() == commutative


def test_build_file_matches_catalog(s3_file):
    H = FiniteDimHopf.from_json(json.loads(s3_file.read_text()))
    assert H.digest == catalog.get("S3").digest


def test_build_from_group_spec(tmp_path, capsys):
    spec = write(tmp_path, "z3.json", {"labels": ["e", "a", "b"],
                                        "table": [["e", "a", "b"], ["a", "b", "e"], ["b", "e", "a"]]})
    code, out, _ = run(capsys, "build", "--group", spec)
    assert code == EXIT_OK
    assert json.loads(out)["labels"] == ["e", "a", "b"]


def test_build_unknown_catalog(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["build", "--catalog", "S4"])
    assert exc.value.code == EXIT_BAD_INPUT
    assert "unknown catalog entry" in capsys.readouterr().err


def test_build_rejects_non_group(tmp_path, capsys):
    spec = write(tmp_path, "bad.json", {"table": [[0, 1], [1, 1]]})
    code, _, err = run(capsys, "build", "--group", spec)
    assert code == EXIT_BAD_INPUT and "not a group" in err


def test_analyze_normal_sub(tmp_path, capsys, s3_file):
    sub = write(tmp_path, "a3.json", {"subgroup": ["(123)"]})
    code, out, _ = run(capsys, "analyze", "--hopf", str(s3_file), "--sub", sub, "--no-timings")
    assert code == EXIT_OK
    rep = json.loads(out)
    assert rep["images"]["c1_dim"] == 2 and rep["images"]["c2_dim"] == 1
    assert rep["subalgebra"]["normal"] is True
    assert rep["summary"]["ok"]


def test_analyze_non_normal_sub(tmp_path, capsys, s3_file):
    sub = write(tmp_path, "t12.json", {"subgroup": ["(12)"]})
    code, out, _ = run(capsys, "analyze", "--hopf", str(s3_file), "--sub", sub, "--no-timings")
    assert code == EXIT_OK
    rep = json.loads(out)
    assert rep["subalgebra"]["normal"] is False
    assert rep["indres"]["c1_basis"] == "skipped: K not normal"
    assert "skipped: K not normal" in out


def test_analyze_without_sub(capsys, s3_file):
    code, out, _ = run(capsys, "analyze", "--hopf", str(s3_file), "--no-timings")
    rep = json.loads(out)
    assert code == EXIT_OK
    assert rep["irr"]["degrees"] == [1, 1, 2]
    assert "indres" not in rep and "subalgebra" not in rep


def test_analyze_is_deterministic(capsys, s3_file):
    outs = [run(capsys, "analyze", "--hopf", str(s3_file), "--no-timings")[1] for _ in range(2)]
    assert outs[0] == outs[1]


def strip(obj):
    if isinstance(obj, dict):
        return {k: strip(v) for k, v in obj.items() if k != "seconds"}
    if isinstance(obj, list):
        return [strip(v) for v in obj]
    return obj


def test_timings_are_the_only_nondeterminism(capsys):
    a = json.loads(run(capsys, "verify", "--suite", "fourier", "--hopf", "C3")[1])
    b = json.loads(run(capsys, "verify", "--suite", "fourier", "--hopf", "C3")[1])
    assert strip(a) == strip(b)


def test_analyze_bad_sub(tmp_path, capsys, s3_file):
    sub = write(tmp_path, "bad.json", {"basis": [[0, 1, 0, 0, 0, 0]]})
    code, _, err = run(capsys, "analyze", "--hopf", str(s3_file), "--sub", sub)
    assert code == EXIT_BAD_INPUT and "not a Hopf subalgebra" in err


def test_analyze_malformed_json(tmp_path, capsys):
    code, _, err = run(capsys, "analyze", "--hopf", write(tmp_path, "x.json", "{nope"))
    assert code == EXIT_BAD_INPUT and "malformed JSON" in err


def test_analyze_non_semisimple(tmp_path, capsys):
    from sweedler import sweedler
    path = write(tmp_path, "sw.json", sweedler().to_json())
    code, _, err = run(capsys, "analyze", "--hopf", path)
    assert code == EXIT_BAD_INPUT and "not semisimple" in err


def test_verify_suite_filtering(capsys):
    code, out, err = run(capsys, "verify", "--suite", "fourier", "--no-timings")
    rep = json.loads(out)
    assert code == EXIT_OK and rep["summary"]["fail"] == 0
    assert {c["suite"] for c in rep["checks"]} == {"fourier"}
    assert "passed" in err


def test_verify_corrupted_algebra(tmp_path, capsys):
    doc = catalog.get("S3").to_json()
    # (12)(12) = (12) instead of ()
    doc["mult"] = [[i, j, 1 if (i, j) == (1, 1) else k, c] for i, j, k, c in doc["mult"]]
    path = write(tmp_path, "broken.json", doc)
    code, out, _ = run(capsys, "verify", "--suite", "axioms", "--hopf", path, "--no-timings")
    rep = json.loads(out)
    assert code == EXIT_CHECKS_FAILED
    failed = [c for c in rep["checks"] if c["status"] == "fail"]
    assert failed and all(c["suite"] == "axioms" and c["witness"] for c in failed)


def test_conductor_option_is_applied(capsys, monkeypatch):
    monkeypatch.delenv("HOPFCALC_CONDUCTOR_MAX", raising=False)
    code, _, _ = run(capsys, "--conductor-max", "120", "build", "--catalog", "C3")
    assert code == EXIT_OK
    import os
    assert os.environ["HOPFCALC_CONDUCTOR_MAX"] == "120"


def test_report_ids_are_known(capsys):
    out = run(capsys, "verify", "--suite", "normality", "--hopf", "S3", "--no-timings")[1]
    for c in json.loads(out)["checks"]:
        assert c["id"] in CHECKS and c["label"] == CHECKS[c["id"]][1]


def test_console_entry_point():
    res = subprocess.run([sys.executable, "-m", "hopfcalc.cli", "build", "--catalog", "C2"],
                         capture_output=True, text=True, check=True)
    assert json.loads(res.stdout)["labels"] == catalog.get("C2").labels
