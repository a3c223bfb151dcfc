import json

import pytest

from bilevel_problems import FdConfig, SolveConfig, records
from bilevel_problems import manifest, reports
from bilevel_problems.registry import aliases


def test_manifest_round_trip():
    text = manifest.emit()
    recs, alias_map = manifest.load(text)
    assert recs == records()
    assert alias_map == aliases()
    assert manifest.emit(recs, alias_map) == text


def test_manifest_fields():
    doc = json.loads(manifest.emit())
    assert doc["schema_version"] == manifest.SCHEMA_VERSION
    entry = next(p for p in doc["problems"] if p["name"] == "ShimizuEtal1997a")
    assert entry["labels"] == "NOONLO"
    assert entry["dims"] == {"n_x": 1, "n_y": 1, "n_G": 0, "n_g": 3}


def test_manifest_rejects_other_schema():
    doc = json.loads(manifest.emit())
    doc["schema_version"] = 99
    with pytest.raises(ValueError):
        manifest.load(json.dumps(doc))


def test_report_layout_and_determinism():
    a = reports.run_derivcheck(["ShimizuEtal1997a", "Bard1988Ex1"], FdConfig(seed=4, samples=5))
    b = reports.run_derivcheck(["ShimizuEtal1997a", "Bard1988Ex1"], FdConfig(seed=4, samples=5))
    lines = [json.loads(line) for line in a.lines()]
    assert [r["record"] for r in lines] == ["header", "row", "row", "summary"]
    assert lines[0]["config"]["fd"]["seed"] == 4
    assert "timestamp" in lines[0]
    assert a.text(with_timestamp=False) == b.text(with_timestamp=False)
    assert reports.strip_timestamp(a.text()) == reports.strip_timestamp(b.text())


def test_parallel_matches_serial():
    sel = ["ShimizuEtal1997a", "Bard1988Ex1", "MitsosBarton2006Ex312"]
    serial = reports.run_validate(sel)
    parallel = reports.run_validate(sel, jobs=2)
    strip = [json.loads(line) for line in serial.lines(False)]
    other = [json.loads(line) for line in parallel.lines(False)]
    strip[0]["config"].pop("jobs")
    other[0]["config"].pop("jobs")
    assert strip == other


def test_nonfinite_values_are_strings():
    rep = reports.RunReport("eval", {}, [{"v": float("inf")}], {})
    assert '"v": "inf"' in rep.lines()[1]


def test_csv_summary():
    rep = reports.run_solve(["HenrionSurowiec2011"], SolveConfig(multistarts=3, polish=1))
    csv_text = rep.csv_summary()
    header, row = csv_text.splitlines()
    assert header.split(",") == ["delta_F", "ok", "problem"]
    assert row.endswith(",True,HenrionSurowiec2011")


def test_solve_report_includes_value_only_claims():
    rep = reports.run_solve(["Bard1988Ex3"], SolveConfig(multistarts=3, polish=1, budget=200))
    doc = rep.rows[0]["documented"]
    assert doc["F"] is None
    assert doc["value_only"] == [{"claimed_F": -12.68, "claimed_f": -1.02, "label": ""}]


def test_unknown_kind_rejected():
    with pytest.raises(ValueError):
        reports.RunReport("plot", {}, [], {})
