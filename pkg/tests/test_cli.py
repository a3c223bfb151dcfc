import json

import numpy as np
import pytest

from bilevel_problems import manifest, records
from bilevel_problems.cli import format_tensor, main


@pytest.fixture(autouse=True)
def report_dir(tmp_path, monkeypatch):
    monkeypatch.setenv("BILEVEL_REPORT_DIR", str(tmp_path))
    return tmp_path


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.mark.parametrize(
    "argv, expected",
    [
        (["ShimizuEtal1997a", "--x", "4", "--y", "0", "--func", "f", "--deriv", "xy"], "-1.5"),
        (["ShimizuEtal1997a", "--x", "4", "--y", "0", "--func", "G", "--deriv", "y"], "[]"),
        (["ShimizuEtal1997a", "--x", "4", "--y", "0", "--func", "F"], "2"),
        (["ShimizuEtal1997a", "--x", "4", "--y", "0", "--func", "F", "--deriv", "x"], "-2"),
        (["ShimizuEtal1997a", "--x", "4", "--y", "0", "--func", "g", "--deriv", "yy"], "[0; 0; 0]"),
        # F = x + y2
        (["Bard1991Ex1", "--x", "2", "--y", "6", "0", "--func", "F"], "2"),
        (["Bard1991Ex1", "--x", "2", "--y", "0", "6", "--func", "F"], "8"),
    ],
)
def test_eval(capsys, argv, expected):
    code, out, _ = run(capsys, "eval", *argv)
    assert code == 0 and out.strip() == expected


def test_eval_errors(capsys):
    assert run(capsys, "eval", "NoSuchProblem1999", "--x", "1", "--y", "1", "--func", "F")[0] == 2
    assert run(capsys, "eval", "Bard1991Ex1", "--x", "2", "--y", "6", "--func", "F")[0] == 2
    assert run(capsys, "eval", "GumusFloudas2001Ex5", "--x", "-1", "--y", "5", "5", "--func", "F")[0] == 2
    assert run(capsys, "eval", "CalamaiVicente1994a", "--x", "1", "--y", "0", "--func", "F",
               "--params", "rho=0.5")[0] == 2
    with pytest.raises(SystemExit) as exc:
        main(["eval", "Bard1991Ex1", "--func", "F"])
    assert exc.value.code == 2


def test_format_tensor():
    assert format_tensor(np.array([[1.0, 2.5], [-3.0, 0.1]])) == "[1 2.5; -3 0.1]"
    assert format_tensor(np.zeros((0, 0))) == "[]"


def test_list_label_filter(capsys):
    code, out, _ = run(capsys, "list", "--labels", "g=O")
    rows = [line.split("\t") for line in out.splitlines()]
    assert rows[0] == ["name", "labels", "n_x", "n_y", "n_G", "n_g", "F*", "f*", "source"]
    names = [r[0] for r in rows[1:]]
    assert "HenrionSurowiec2011" in names and "Bard1988Ex1" not in names
    assert all(r[1][4] == "O" for r in rows[1:])


def test_list_all(capsys):
    code, out, _ = run(capsys, "list")
    assert code == 0 and len(out.splitlines()) == 1 + len(records())


def test_check_derivatives(capsys, report_dir):
    code, out, _ = run(capsys, "check-derivatives", "--only", "MorganPatrone2006b", "--seed", "7")
    assert code == 0
    lines = (report_dir / "derivcheck.jsonl").read_text().splitlines()
    header = json.loads(lines[0])
    assert header["config"]["fd"]["seed"] == 7 and header["config"]["selection"] == ["MorganPatrone2006b"]
    code, _, _ = run(capsys, "check-derivatives", "--only", "ShimizuEtal1997a", "--tol", "1e-12")
    assert code == 1


def test_validate_solutions(capsys, report_dir):
    code, out, _ = run(capsys, "validate-solutions", "--only", "AiyoshiShimizu1984Ex2", "Zlobec2001b", "--csv")
    assert code == 0
    rows = [json.loads(line) for line in (report_dir / "validate.jsonl").read_text().splitlines()]
    by_name = {r["problem"]: r for r in rows if r["record"] == "row"}
    assert [s["verdict"] for s in by_name["AiyoshiShimizu1984Ex2"]["solutions"]] == ["confirmed", "confirmed"]
    assert by_name["Zlobec2001b"]["not_checkable"] == "no_optimal_solution"
    assert (report_dir / "validate.csv").exists()


def test_validate_empty_selection(capsys, report_dir):
    code, _, _ = run(capsys, "validate-solutions", "--only")
    assert code == 0
    lines = (report_dir / "validate.jsonl").read_text().splitlines()
    assert [json.loads(line)["record"] for line in lines] == ["header", "summary"]


def test_solve(capsys):
    code, out, _ = run(capsys, "solve", "Bard1988Ex1", "--seed", "1")
    assert code == 0
    F = float(out.splitlines()[0].split("=")[1])
    assert abs(F - 17) <= 1e-2


def test_export_manifest_round_trip(capsys, tmp_path):
    path = tmp_path / "manifest.json"
    assert run(capsys, "export-manifest", str(path))[0] == 0
    recs, _ = manifest.load(path.read_text())
    assert recs == records()


def test_report_dir_flag_overrides_env(capsys, tmp_path):
    target = tmp_path / "elsewhere"
    run(capsys, "check-derivatives", "--only", "Bard1988Ex1", "--samples", "2", "--report-dir", str(target))
    assert (target / "derivcheck.jsonl").exists()
