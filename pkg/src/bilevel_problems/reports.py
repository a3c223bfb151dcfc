"""Suite-level runs and their reports.

A report is JSON lines: one header record (kind, schema version, full config,
timestamp), one record per problem and one summary record. Keys are sorted and
nonfinite floats are written as strings, so equal inputs give identical bytes
apart from the timestamp.
"""

from __future__ import annotations

import csv
import dataclasses
import io
import json
import math
from concurrent.futures import ProcessPoolExecutor
from datetime import datetime, timezone

import numpy as np

from .core import EvalSelector, Func, evaluate
from .derivcheck import FdConfig, check_problem
from .errors import BilevelError
from .registry import lookup
from .solver import SolveConfig, solve_nested
from .validation import CHECKED_STATUSES, OracleConfig, Tolerances, criterion_status, validate

SCHEMA_VERSION = 1
KINDS = ("derivcheck", "validate", "solve", "eval")


def clean(obj):
    """JSON-safe copy: numpy scalars and arrays become Python, inf/nan become strings."""
    if dataclasses.is_dataclass(obj) and not isinstance(obj, type):
        return clean(dataclasses.asdict(obj))
    if isinstance(obj, dict):
        return {str(k): clean(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [clean(v) for v in obj]
    if isinstance(obj, np.ndarray):
        return clean(obj.tolist())
    if isinstance(obj, (np.integer,)):
        return int(obj)
    if isinstance(obj, (float, np.floating)):
        v = float(obj)
        return v if math.isfinite(v) else str(v)
    return obj


@dataclasses.dataclass
class RunReport:
    kind: str
    config: dict
    rows: list
    summary: dict
    timestamp: str = ""

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown report kind {self.kind!r}")
        if not self.timestamp:
            self.timestamp = datetime.now(timezone.utc).isoformat(timespec="seconds")

    def lines(self, with_timestamp: bool = True) -> list[str]:
        header = {"record": "header", "kind": self.kind, "schema_version": SCHEMA_VERSION, "config": self.config}
        if with_timestamp:
            header["timestamp"] = self.timestamp
        out = [header]
        out += [{"record": "row", **r} for r in self.rows]
        out.append({"record": "summary", **self.summary})
        return [json.dumps(clean(r), sort_keys=True) for r in out]

    def text(self, with_timestamp: bool = True) -> str:
        return "\n".join(self.lines(with_timestamp)) + "\n"

    def write(self, path):
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(self.text())

    def csv_summary(self) -> str:
        """One line per row with its scalar fields only."""
        flat = [{k: v for k, v in clean(r).items() if not isinstance(v, (dict, list))} for r in self.rows]
        cols = sorted({k for r in flat for k in r})
        buf = io.StringIO()
        w = csv.DictWriter(buf, fieldnames=cols, lineterminator="\n")
        w.writeheader()
        w.writerows(flat)
        return buf.getvalue()


def strip_timestamp(text: str) -> str:
    """Report text with the header timestamp removed, for comparisons."""
    out = []
    for line in text.splitlines():
        rec = json.loads(line)
        rec.pop("timestamp", None)
        out.append(json.dumps(rec, sort_keys=True))
    return "\n".join(out) + "\n"


def _map(fn, args, jobs: int):
    """Ordered map, in worker processes when ``jobs > 1``."""
    if jobs > 1 and len(args) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as ex:
            return list(ex.map(fn, args))
    return [fn(a) for a in args]


# ---------------------------------------------------------------------------
# derivative check
# ---------------------------------------------------------------------------


def _derivcheck_one(arg):
    name, params, config = arg
    return check_problem(lookup(name, params)[0], config).as_dict()


def run_derivcheck(selection: list[str], config: FdConfig = FdConfig(), params: dict | None = None,
                   jobs: int = 1) -> RunReport:
    rows = _map(_derivcheck_one, [(n, params, config) for n in selection], jobs)
    failed = [r["problem"] for r in rows if not r["passed"]]
    skipped = {}
    for r in rows:
        for k, v in r["skipped"].items():
            skipped[k] = skipped.get(k, 0) + v
    summary = {
        "problems": len(rows),
        "passed": len(rows) - len(failed),
        "failed": failed,
        "skipped": dict(sorted(skipped.items())),
    }
    cfg = {"selection": list(selection), "params": params or {}, "fd": dataclasses.asdict(config), "jobs": jobs}
    return RunReport("derivcheck", cfg, rows, summary)


# ---------------------------------------------------------------------------
# solution validation
# ---------------------------------------------------------------------------


def _validate_one(arg):
    name, params, tol, oracle = arg
    problem, rec = lookup(name, params)
    verdict = validate(rec, problem, tol, oracle)
    row = verdict.as_dict()
    row["criterion"] = [{"solution": i, "status": s} for i, s in criterion_status(verdict, rec)]
    return row


def run_validate(selection: list[str], tol: Tolerances = Tolerances(), oracle: OracleConfig = OracleConfig(),
                 params: dict | None = None, jobs: int = 1) -> RunReport:
    rows = _map(_validate_one, [(n, params, tol, oracle) for n in selection], jobs)
    verdicts: dict = {}
    crit: dict = {"strict": 0, "documented": 0, "failed": 0}
    findings: dict = {}
    for r in rows:
        for s in r["solutions"]:
            verdicts[s["verdict"]] = verdicts.get(s["verdict"], 0) + 1
        for c in r["criterion"]:
            crit[c["status"]] += 1
        for f in r["findings"]:
            findings[f["kind"]] = findings.get(f["kind"], 0) + 1
    summary = {
        "problems": len(rows),
        "verdicts": dict(sorted(verdicts.items())),
        "checked_points": crit,
        "not_checkable": [r["problem"] for r in rows if r["not_checkable"]],
        "findings": dict(sorted(findings.items())),
    }
    cfg = {
        "selection": list(selection),
        "params": params or {},
        "tolerances": dataclasses.asdict(tol),
        "oracle": dataclasses.asdict(oracle),
        "jobs": jobs,
    }
    return RunReport("validate", cfg, rows, summary)


# ---------------------------------------------------------------------------
# baseline solver
# ---------------------------------------------------------------------------


def documented_optimum(name: str, params: dict | None = None) -> dict:
    """F at the first global/best_known point, plus any value-only claims."""
    problem, rec = lookup(name, params)
    out = {"F": None, "status": None, "value_only": []}
    for s in rec.known_solutions:
        if s.status == "value_only":
            out["value_only"].append({"claimed_F": s.claimed_F, "claimed_f": s.claimed_f, "label": s.label})
        elif out["F"] is None and s.status in CHECKED_STATUSES and s.point is not None:
            out["F"] = float(evaluate(problem, s.point, EvalSelector(Func.UpperObjective))[0, 0])
            out["status"] = s.status
    return out


def _solve_one(arg):
    name, params, config = arg
    problem = lookup(name, params)[0]
    row = {"problem": name, "documented": documented_optimum(name, params)}
    try:
        res = solve_nested(problem, config)
    except BilevelError as exc:
        row.update(ok=False, error=f"{type(exc).__name__}: {exc}")
        return row
    row.update(ok=True, result=res.as_dict())
    doc = row["documented"]["F"]
    row["delta_F"] = None if doc is None else res.F - doc
    return row


def run_solve(selection: list[str], config: SolveConfig = SolveConfig(), params: dict | None = None,
              jobs: int = 1) -> RunReport:
    rows = _map(_solve_one, [(n, params, config) for n in selection], jobs)
    summary = {
        "problems": len(rows),
        "solved": sum(r["ok"] for r in rows),
        "incomplete": [r["problem"] for r in rows if r["ok"] and not r["result"]["complete"]],
        "errors": [r["problem"] for r in rows if not r["ok"]],
    }
    cfg = {"selection": list(selection), "params": params or {}, "solver": dataclasses.asdict(config), "jobs": jobs}
    return RunReport("solve", cfg, rows, summary)
