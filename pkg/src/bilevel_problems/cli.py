"""Command-line front end.

Exit codes: 0 success, 1 verification failure, 2 usage or input error.
Reports go to ``--report-dir``, else to $BILEVEL_REPORT_DIR, else to
``./bilevel-reports``.
"""

from __future__ import annotations

import argparse
import os
import sys
from pathlib import Path

import numpy as np

from . import manifest, reports
from .core import EvalSelector, Point, evaluate
from .derivcheck import FdConfig
from .errors import BilevelError, DimensionMismatch, DomainViolation, ParameterOutOfRange, UnknownProblem
from .registry import lookup, names, record
from .solver import SolveConfig
from .validation import OracleConfig, Tolerances

REPORT_ENV = "BILEVEL_REPORT_DIR"
DEFAULT_REPORT_DIR = "bilevel-reports"

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

LABEL_KEYS = "FGHfgh"


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def format_number(v: float) -> str:
    return np.format_float_positional(float(v), trim="-")


def format_tensor(a: np.ndarray) -> str:
    """Row-major text: scalars bare, ``[]`` when empty, ``[a b; c d]`` otherwise."""
    a = np.atleast_2d(a)
    if a.size == 0:
        return "[]"
    if a.shape == (1, 1):
        return format_number(a[0, 0])
    return "[" + "; ".join(" ".join(format_number(v) for v in row) for row in a) + "]"


def _params(items) -> dict:
    out = {}
    for item in items or []:
        key, sep, val = item.partition("=")
        if not sep or not key:
            raise ValueError(f"--params expects k=v, got {item!r}")
        out[key] = float(val)
    return out


def _selection(args) -> list[str]:
    if args.only is None:
        return names()
    out = []
    for item in args.only:
        for n in item.split(","):
            if n:
                out.append(record(n).name)
    return out


def _report_dir(args) -> Path:
    d = Path(args.report_dir or os.environ.get(REPORT_ENV) or DEFAULT_REPORT_DIR)
    d.mkdir(parents=True, exist_ok=True)
    return d


def _write(report: reports.RunReport, args) -> Path:
    d = _report_dir(args)
    path = d / f"{report.kind}.jsonl"
    report.write(path)
    if args.csv:
        (d / f"{report.kind}.csv").write_text(report.csv_summary(), encoding="utf-8")
    return path


def _fmt_claim(v) -> str:
    return "-" if v is None else format_number(v)


def _claims(rec):
    F, f = rec.claimed_F, rec.claimed_f
    for s in rec.known_solutions:
        if F is None and f is None and (s.claimed_F is not None or s.claimed_f is not None):
            F, f = s.claimed_F, s.claimed_f
    return F, f


def _label_filter(specs):
    want = {}
    for spec in specs or []:
        key, sep, val = spec.partition("=")
        if not sep or key not in LABEL_KEYS or not val or set(val) - set("NLO"):
            raise ValueError(f"--labels expects K=V with K in {LABEL_KEYS} and V over N/L/O, got {spec!r}")
        want[LABEL_KEYS.index(key)] = set(val)
    return lambda rec: all(rec.full_labels[i] in vals for i, vals in want.items())


# ---------------------------------------------------------------------------
# commands
# ---------------------------------------------------------------------------


def cmd_list(args) -> int:
    keep = _label_filter(args.labels)
    print("name\tlabels\tn_x\tn_y\tn_G\tn_g\tF*\tf*\tsource")
    for n in names():
        rec = record(n)
        if not keep(rec):
            continue
        if args.flag and not set(args.flag) <= rec.flags:
            continue
        F, f = _claims(rec)
        d = rec.dims
        print("\t".join([rec.name, rec.full_labels, str(d.n_x), str(d.n_y), str(d.n_G), str(d.n_g),
                         _fmt_claim(F), _fmt_claim(f), rec.source_ref]))
    return EXIT_OK


def cmd_eval(args) -> int:
    problem = lookup(args.name, _params(args.params))[0]
    point = Point(args.x, args.y)
    sel = EvalSelector.parse(args.func, args.deriv)
    print(format_tensor(evaluate(problem, point, sel)))
    return EXIT_OK


def cmd_check_derivatives(args) -> int:
    config = FdConfig(
        samples=args.samples if args.samples is not None else FdConfig.samples,
        seed=args.seed,
        rel_tol=args.tol if args.tol is not None else FdConfig.rel_tol,
        abs_tol=args.tol if args.tol is not None else FdConfig.abs_tol,
    )
    report = reports.run_derivcheck(_selection(args), config, _params(args.params), args.jobs)
    path = _write(report, args)
    s = report.summary
    print(f"derivative check: {s['passed']}/{s['problems']} passed, skipped {s['skipped']}; report {path}")
    for n in s["failed"]:
        print(f"FAIL {n}")
    return EXIT_FAIL if s["failed"] else EXIT_OK


def cmd_validate_solutions(args) -> int:
    tol = Tolerances(feasibility=args.tol) if args.tol is not None else Tolerances()
    report = reports.run_validate(_selection(args), tol, OracleConfig(seed=args.seed), _params(args.params), args.jobs)
    path = _write(report, args)
    s = report.summary
    print(f"validation: {s['problems']} problems, verdicts {s['verdicts']}, "
          f"checked points {s['checked_points']}; report {path}")
    for row in report.rows:
        for c in row["criterion"]:
            if c["status"] == "failed":
                print(f"FAIL {row['problem']} solution {c['solution']}")
    return EXIT_FAIL if s["checked_points"]["failed"] else EXIT_OK


def cmd_solve(args) -> int:
    kw = {"seed": args.seed}
    if args.multistarts is not None:
        kw["multistarts"] = args.multistarts
    if args.budget is not None:
        kw["budget"] = args.budget
    config = SolveConfig(**kw)
    name = record(args.name, _params(args.params)).name
    report = reports.run_solve([name], config, _params(args.params))
    path = _write(report, args)
    row = report.rows[0]
    if not row["ok"]:
        print(row["error"], file=sys.stderr)
        return EXIT_FAIL
    r = row["result"]
    print(f"F = {format_number(r['F'])}")
    print(f"x = {format_tensor(np.array(r['x']))}")
    print(f"y = {format_tensor(np.array(r['y']))}")
    doc = row["documented"]
    if doc["F"] is not None:
        print(f"documented F = {format_number(doc['F'])} ({doc['status']})")
    for v in doc["value_only"]:
        print(f"value-only claim F* = {_fmt_claim(v['claimed_F'])}, f* = {_fmt_claim(v['claimed_f'])}")
    if not r["complete"]:
        print("budget exhausted; result incomplete")
    print(f"report {path}")
    return EXIT_OK


def cmd_export_manifest(args) -> int:
    text = manifest.emit()
    if args.path == "-":
        sys.stdout.write(text)
    else:
        Path(args.path).write_text(text, encoding="utf-8")
    return EXIT_OK


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------


def _run_flags(p, samples=False):
    p.add_argument("--only", nargs="*", metavar="NAME", help="problem names (space or comma separated)")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--tol", type=float, default=None)
    if samples:
        p.add_argument("--samples", type=int, default=None)
    p.add_argument("--params", nargs="*", metavar="K=V")
    p.add_argument("--jobs", type=int, default=1, help="worker processes")
    p.add_argument("--report-dir", default=None)
    p.add_argument("--csv", action="store_true", help="also write a CSV summary")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="bilevel", description="Bilevel test problem library tools.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("list", help="list problems")
    p.add_argument("--labels", nargs="*", metavar="K=V", help="label filter, e.g. g=O or G=LN")
    p.add_argument("--flag", nargs="*", help="require record flags")
    p.set_defaults(fn=cmd_list)

    p = sub.add_parser("eval", help="evaluate one function or derivative")
    p.add_argument("name")
    p.add_argument("--x", nargs="+", type=float, required=True)
    p.add_argument("--y", nargs="+", type=float, required=True)
    p.add_argument("--func", choices=list("FGfg"), required=True)
    p.add_argument("--deriv", choices=["x", "y", "xx", "xy", "yy"], default=None)
    p.add_argument("--params", nargs="*", metavar="K=V")
    p.set_defaults(fn=cmd_eval)

    p = sub.add_parser("check-derivatives", help="finite-difference check of all derivatives")
    _run_flags(p, samples=True)
    p.set_defaults(fn=cmd_check_derivatives)

    p = sub.add_parser("validate-solutions", help="check stored solutions against the oracle")
    _run_flags(p)
    p.set_defaults(fn=cmd_validate_solutions)

    p = sub.add_parser("solve", help="run the baseline nested solver")
    p.add_argument("name")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--multistarts", type=int, default=None)
    p.add_argument("--budget", type=int, default=None)
    p.add_argument("--params", nargs="*", metavar="K=V")
    p.add_argument("--report-dir", default=None)
    p.add_argument("--csv", action="store_true")
    p.set_defaults(fn=cmd_solve)

    p = sub.add_parser("export-manifest", help="write the registry manifest")
    p.add_argument("path", nargs="?", default="-", help="output file, '-' for stdout")
    p.set_defaults(fn=cmd_export_manifest)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except (UnknownProblem, DimensionMismatch, DomainViolation, ParameterOutOfRange, ValueError) as exc:
        msg = exc.args[0] if isinstance(exc, KeyError) and exc.args else exc
        print(f"error: {msg}", file=sys.stderr)
        return EXIT_USAGE
    except BilevelError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
