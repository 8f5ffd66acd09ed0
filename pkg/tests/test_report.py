import re
from fractions import Fraction
from pathlib import Path

import pytest

from hopfcalc import catalog
from hopfcalc.cyclotomic import ConductorLimitError, zeta
from hopfcalc.report import CHECKS, SUITES, Recorder, build_report, dumps, jsonable, run_suite, strip_timings

README = Path(__file__).resolve().parent.parent / "README.md"


def test_every_check_id_belongs_to_a_suite():
    assert all(suite in SUITES for suite, _, _ in CHECKS.values())


def test_recorder_statuses():
    rec = Recorder()
    rec.run("Eq-f1", "X", lambda: (True, None, {"value": Fraction(1, 2)}))
    rec.run("Eq-f2", "X", lambda: (False, {"at": 3}, None))
    rec.run("Eq-comtr", "X", lambda: (False, None, None))
    rec.skip("Eq-r1", "X", "skipped: K not normal")
    statuses = [r["status"] for r in rec.records]
    assert statuses == ["pass", "fail", "fail", "skipped"]
    assert rec.records[0]["details"] == {"value": "1/2"} and "witness" not in rec.records[0]
    assert rec.records[1]["witness"] == {"at": 3}
    assert rec.records[2]["witness"] == "check returned false"
    assert rec.records[0]["label"] == "f1" and rec.records[0]["suite"] == "axioms"


def test_resource_limits_are_recorded_without_aborting(monkeypatch):
    monkeypatch.setenv("HOPFCALC_CONDUCTOR_MAX", "6")

    def too_big():
        zeta(5) + zeta(7)
        return True, None, None

    rec = Recorder()
    rec.run("Eq-f1", "X", too_big)
    rec.run("Eq-f2", "X", lambda: (True, None, None))
    assert [r["status"] for r in rec.records] == ["error", "pass"]
    assert rec.records[0]["witness"].startswith("resource limit")
    with pytest.raises(ConductorLimitError):
        zeta(5) + zeta(7)


def test_unknown_check_id_is_a_bug():
    with pytest.raises(KeyError):
        Recorder().run("Not-a-check", "X", lambda: (True, None, None))


def test_build_report_orders_and_counts():
    rec = Recorder()
    rec.run("Rem-comb", "b", lambda: (True, None, None))
    rec.run("Eq-f1", "z", lambda: (False, "w", None))
    rec.run("Eq-f1", "a", lambda: (True, None, None))
    rep = build_report("t", {"S3": catalog.get("S3")}, rec.records)
    assert [(r["suite"], r["target"]) for r in rep["checks"]] == [("axioms", "a"), ("axioms", "z"), ("indres", "b")]
    assert rep["summary"] == {"checks": 3, "pass": 2, "fail": 1, "error": 0, "skipped": 0, "ok": False}
    assert rep["inputs"] == {"S3": catalog.get("S3").digest}


def test_jsonable_keeps_exact_values():
    out = jsonable({"a": (1, Fraction(-2, 3), zeta(3)), 2: [True, None]})
    assert out["a"][:2] == [1, "-2/3"]
    assert out["a"][2] == {"conductor": 3, "coeffs": {"1": "1"}}
    assert out["2"] == [True, None]


def test_suite_rejects_unknown_name():
    with pytest.raises(ValueError, match="unknown suite"):
        run_suite("everything")


def test_custom_algebras_only_run_per_algebra_suites():
    rep = run_suite("all", {"Q8": catalog.get("Q8")})
    assert rep["summary"]["ok"]
    assert {c["suite"] for c in rep["checks"]} == {"axioms", "fourier", "double"}


def test_full_report_is_green_and_complete(full_report):
    s = full_report["summary"]
    assert s["ok"] and s["fail"] == 0 and s["error"] == 0
    assert {c["id"] for c in full_report["checks"]} == set(CHECKS)
    for c in full_report["checks"]:
        assert c["label"] == CHECKS[c["id"]][1]
        if c["status"] == "skipped":
            assert c["reason"] == "skipped: K not normal"


def test_report_bytes_are_deterministic_without_timings():
    a = dumps(strip_timings(run_suite("double", {"S3": catalog.get("S3")})))
    b = dumps(strip_timings(run_suite("double", {"S3": catalog.get("S3")})))
    assert a == b and '"seconds"' not in a


def test_readme_traceability_table_covers_every_check():
    rows = {}
    for line in README.read_text(encoding="utf-8").splitlines():
        m = re.match(r"\|\s*`([^`]+)`\s*\|\s*([^|]+?)\s*\|\s*`([^`]+)`\s*\|", line)
        if m:
            rows[m.group(1)] = (m.group(2), m.group(3))
    assert set(rows) == set(CHECKS)
    for cid, (suite, label) in rows.items():
        assert (suite, label) == CHECKS[cid][:2], cid
