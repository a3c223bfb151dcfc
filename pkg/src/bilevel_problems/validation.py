"""Checks of the stored known solutions against the problem formulas.

The authoritative optimality test is membership of y* in the lower-level
argmin at x*, decided by an independent brute-force oracle (dense grid plus
local refinement, or seeded multistart for large n_y). The lower-level KKT
residual is reported alongside but never decides a verdict.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass, field

import numpy as np
from scipy.optimize import minimize, nnls

from .core import Deriv, EvalSelector, Func, Point, ProblemDefinition, evaluate
from .errors import DomainViolation, NoFeasiblePoint, NotCheckable
from .registry import ProblemRecord, lookup

DISCREPANCY_PREFIX = "discrepancy:"
CONFLICT_PREFIX = "claim_conflict:"
CHECKED_STATUSES = ("global", "best_known")
ACTIVE_TOL = 1e-6
GRID_FEAS_TOL = 1e-9
REFINE_FEAS_TOL = 1e-8

VERDICTS = ("confirmed", "feasible_but_suboptimal", "value_mismatch", "infeasible", "not_checkable")

_FY = EvalSelector(Func.LowerObjective, Deriv.Dy)
_G = EvalSelector(Func.UpperConstraints)
_g = EvalSelector(Func.LowerConstraints)
_gY = EvalSelector(Func.LowerConstraints, Deriv.Dy)


@dataclass(frozen=True)
class Tolerances:
    feasibility: float = 1e-6
    value_rel: float = 1e-3
    gap: float = 1e-3


@dataclass(frozen=True)
class OracleConfig:
    grid_small: int = 201  # points per axis for n_y <= 2
    grid_medium: int = 41  # points per axis for n_y in {3, 4}
    multistarts: int = 20
    refine_from: int = 5
    seed: int = 0


# ---------------------------------------------------------------------------
# feasibility and KKT
# ---------------------------------------------------------------------------


def feasibility(problem: ProblemDefinition, point: Point) -> tuple[float, float]:
    """Largest positive part of the G rows and of the g rows (0 when empty)."""

    def worst(sel):
        v = evaluate(problem, point, sel)
        return float(max(0.0, v.max())) if v.size else 0.0

    return worst(_G), worst(_g)


def kkt_multipliers(problem: ProblemDefinition, point: Point):
    """Nonnegative least-squares multipliers for the active lower constraints.

    Returns ``(residual, lam)`` with ``lam`` of length n_g (zero on inactive
    rows) and residual ``|grad_y f + J^T lam| + sum lam_i |g_i|``.
    """
    if problem.nonsmooth:
        raise NotCheckable(f"{problem.name} is not twice differentiable")
    fy = evaluate(problem, point, _FY).ravel()
    gv = evaluate(problem, point, _g).ravel()
    J = evaluate(problem, point, _gY)
    lam = np.zeros(gv.size)
    active = np.flatnonzero(np.abs(gv) <= ACTIVE_TOL)
    if active.size:
        lam[active], _ = nnls(J[active].T, -fy)
    return kkt_combine(fy, gv, J, lam), lam


def kkt_combine(fy, gv, J, lam) -> float:
    """Stationarity norm plus complementarity violation."""
    station = fy + J.T @ lam if lam.size else fy
    return float(np.linalg.norm(station) + np.sum(lam * np.abs(gv)))


def kkt_residual(problem: ProblemDefinition, point: Point) -> float:
    return kkt_multipliers(problem, point)[0]


# ---------------------------------------------------------------------------
# lower-level oracle
# ---------------------------------------------------------------------------


@dataclass
class OracleResult:
    y: np.ndarray
    f: float
    mode: str  # "grid" or "multistart"
    # every (f, y) found, best first; used for optimistic tie-breaking
    candidates: list = field(default_factory=list, repr=False)

    @property
    def partial(self) -> bool:
        return self.mode == "multistart"


def oracle_box(problem: ProblemDefinition) -> np.ndarray:
    lb = problem.lower_box
    dom = problem.domain_box[problem.dims.n_x :]
    return np.column_stack([np.maximum(lb[:, 0], dom[:, 0]), np.minimum(lb[:, 1], dom[:, 1])])


def _batch(problem, x, Y):
    Z = np.hstack([np.broadcast_to(x, (Y.shape[0], x.size)), Y])
    with np.errstate(all="ignore"):
        f = problem.values(Func.LowerObjective, Z)
        g = problem.values(Func.LowerConstraints, Z)
    ok = np.isfinite(f)
    if g.shape[1]:
        ok &= np.all(g <= GRID_FEAS_TOL, axis=1)
    return f, ok


def _refine(problem, x, y0, box):
    """SLSQP on the lower level from ``y0``; returns (y, f) if feasible."""
    def pt(y):
        return Point(x, y)

    def fun(y):
        return float(evaluate(problem, pt(y), EvalSelector(Func.LowerObjective))[0, 0])

    def jac(y):
        return evaluate(problem, pt(y), _FY).ravel()

    cons = []
    if problem.dims.n_g:
        cons.append({
            "type": "ineq",
            "fun": lambda y: -evaluate(problem, pt(y), _g).ravel(),
            "jac": lambda y: -evaluate(problem, pt(y), _gY),
        })
    try:
        with np.errstate(all="ignore"), warnings.catch_warnings():
            warnings.simplefilter("ignore", RuntimeWarning)
            res = minimize(fun, y0, jac=jac, bounds=[tuple(b) for b in box],
                           constraints=cons, method="SLSQP",
                           options={"maxiter": 200, "ftol": 1e-12})
        y = np.clip(res.x, box[:, 0], box[:, 1])
        f = fun(y)
        viol = feasibility(problem, pt(y))[1] if problem.dims.n_g else 0.0
    except (DomainViolation, ValueError, FloatingPointError):
        return None
    if not np.isfinite(f) or viol > REFINE_FEAS_TOL:
        return None
    return y, f


def lower_level_oracle(
    problem: ProblemDefinition, x, config: OracleConfig = OracleConfig(), resolution: int | None = None
) -> OracleResult:
    """Best lower-level point found at fixed ``x``.

    Grid mode (n_y <= 4) scans a uniform grid of the lower search box, keeps
    the feasible points and refines the best few by SLSQP. Larger n_y uses
    seeded uniform multistarts with SLSQP and is flagged partial.
    """
    x = np.atleast_1d(np.asarray(x, dtype=float))
    ny = problem.dims.n_y
    box = oracle_box(problem)
    candidates: list[tuple[float, np.ndarray]] = []
    if ny <= 4:
        mode = "grid"
        k = resolution or (config.grid_small if ny <= 2 else config.grid_medium)
        axes = [np.linspace(lo, hi, k) for lo, hi in box]
        best = []
        # scan one slice of the first axis at a time to bound memory
        if ny == 1:
            chunks = [axes[0].reshape(-1, 1)]
        else:
            rest = np.stack(np.meshgrid(*axes[1:], indexing="ij"), axis=-1).reshape(-1, ny - 1)
            chunks = (np.hstack([np.full((rest.shape[0], 1), a), rest]) for a in axes[0])
        for Y in chunks:
            f, ok = _batch(problem, x, Y)
            idx = np.flatnonzero(ok)
            if idx.size:
                top = idx[np.argsort(f[idx], kind="stable")[: config.refine_from]]
                best.extend((float(f[i]), Y[i].copy()) for i in top)
        best.sort(key=lambda t: t[0])
        best = best[: config.refine_from]
        candidates.extend(best)
        starts = [y for _, y in best]
    else:
        mode = "multistart"
        starts = []
    if not starts:
        # also covers feasible sets too thin for any grid point to land in
        rng = np.random.default_rng(config.seed)
        starts = [rng.uniform(box[:, 0], box[:, 1]) for _ in range(config.multistarts)]
    for y0 in starts:
        out = _refine(problem, x, y0, box)
        if out is not None:
            candidates.append((out[1], out[0]))
    if not candidates:
        raise NoFeasiblePoint(f"{problem.name}: no feasible lower-level point at x={x.tolist()}")
    candidates.sort(key=lambda t: t[0])
    f_best, y_best = candidates[0]
    return OracleResult(np.asarray(y_best, dtype=float), float(f_best), mode, candidates)


# ---------------------------------------------------------------------------
# validation
# ---------------------------------------------------------------------------


@dataclass
class SolutionCheck:
    index: int
    label: str
    status: str
    verdict: str
    reason: str = ""
    upper_residual: float | None = None
    lower_residual: float | None = None
    F: float | None = None
    f: float | None = None
    F_error: float | None = None
    f_error: float | None = None
    f_oracle: float | None = None
    gap: float | None = None
    oracle_partial: bool = False
    kkt: float | None = None
    multipliers: list | None = None
    documented: bool = False

    @property
    def strict_pass(self) -> bool:
        return self.verdict == "confirmed"

    def as_dict(self) -> dict:
        return {k: v for k, v in self.__dict__.items()}


@dataclass
class ValidationVerdict:
    name: str
    solutions: list = field(default_factory=list)
    findings: list = field(default_factory=list)
    # set when the problem as a whole cannot be checked
    not_checkable: str | None = None

    def as_dict(self) -> dict:
        return {
            "problem": self.name,
            "not_checkable": self.not_checkable,
            "solutions": [s.as_dict() for s in self.solutions],
            "findings": self.findings,
        }


def _value_error(computed, claim):
    if claim is None:
        return None
    return abs(computed - claim)


def classify(check: SolutionCheck, claim_F, claim_f, tol: Tolerances, value_tol=None) -> str:
    """Verdict from residuals alone: infeasible > suboptimal > value mismatch."""
    if max(check.upper_residual, check.lower_residual) > tol.feasibility:
        return "infeasible"
    if check.gap is not None and check.gap > tol.gap:
        return "feasible_but_suboptimal"
    rel = tol.value_rel if value_tol is None else value_tol
    for err, claim in ((check.F_error, claim_F), (check.f_error, claim_f)):
        if err is not None and err > rel * (1 + abs(claim)):
            return "value_mismatch"
    return "confirmed"


def validate_solution(problem: ProblemDefinition, rec: ProblemRecord, index: int,
                      tol: Tolerances = Tolerances(), oracle: OracleConfig = OracleConfig()) -> SolutionCheck:
    sol = rec.known_solutions[index]
    documented = sol.note.startswith(DISCREPANCY_PREFIX)
    check = SolutionCheck(index, sol.label, sol.status, "not_checkable", documented=documented)
    if "no_optimal_solution" in rec.flags:
        check.reason = "no_optimal_solution"
        return check
    if sol.point is None:
        check.reason = "value_only" if sol.status == "value_only" else "no_point"
        return check
    point = sol.point
    try:
        check.upper_residual, check.lower_residual = feasibility(problem, point)
        check.F = float(evaluate(problem, point, EvalSelector(Func.UpperObjective))[0, 0])
        check.f = float(evaluate(problem, point, EvalSelector(Func.LowerObjective))[0, 0])
    except DomainViolation as exc:
        check.verdict, check.reason = "infeasible", f"domain_violation: {exc}"
        return check
    check.F_error = _value_error(check.F, sol.claimed_F)
    check.f_error = _value_error(check.f, sol.claimed_f)
    try:
        res = lower_level_oracle(problem, point.x, oracle)
        check.f_oracle, check.oracle_partial = res.f, res.partial
        check.gap = max(0.0, check.f - res.f)
    except NoFeasiblePoint:
        check.reason = "oracle found no feasible lower-level point"
    if "lower_level_kkt_checkable" in rec.flags and not problem.nonsmooth:
        check.kkt, lam = kkt_multipliers(problem, point)
        check.multipliers = lam.tolist()
    check.verdict = classify(check, sol.claimed_F, sol.claimed_f, tol, sol.value_tol)
    return check


def _finding(rec, check, kind, detail) -> dict:
    return {
        "problem": rec.name,
        "solution": check.index if check is not None else None,
        "label": check.label if check is not None else "",
        "kind": kind,
        "detail": detail,
    }


def validate(rec: ProblemRecord, problem: ProblemDefinition | None = None,
             tol: Tolerances = Tolerances(), oracle: OracleConfig = OracleConfig()) -> ValidationVerdict:
    """Validate every stored solution of ``rec`` and collect structured findings."""
    if problem is None:
        problem = lookup(rec.name)[0]
    out = ValidationVerdict(rec.name)
    if "no_optimal_solution" in rec.flags:
        out.not_checkable = "no_optimal_solution"
        out.findings.append(_finding(rec, None, "not_checkable", "no_optimal_solution"))
    for note in rec.notes:
        if note.startswith(CONFLICT_PREFIX):
            out.findings.append(_finding(rec, None, "claim_conflict", note[len(CONFLICT_PREFIX):].strip()))
    for i, sol in enumerate(rec.known_solutions):
        check = validate_solution(problem, rec, i, tol, oracle)
        out.solutions.append(check)
        if check.verdict in ("confirmed", "not_checkable"):
            if check.verdict == "not_checkable" and sol.status == "value_only":
                out.findings.append(_finding(rec, check, "value_only",
                                             {"claimed_F": sol.claimed_F, "claimed_f": sol.claimed_f}))
            continue
        detail = {
            "verdict": check.verdict,
            "upper_residual": check.upper_residual,
            "lower_residual": check.lower_residual,
            "gap": check.gap,
            "F": check.F,
            "f": check.f,
            "claimed_F": sol.claimed_F,
            "claimed_f": sol.claimed_f,
        }
        if check.reason:
            detail["reason"] = check.reason
        if check.documented:
            detail["note"] = sol.note
        kind = "documented_discrepancy" if check.documented else "discrepancy"
        out.findings.append(_finding(rec, check, kind, detail))
    return out


def criterion_status(verdict: ValidationVerdict, rec: ProblemRecord) -> list[tuple[int, str]]:
    """For each global/best_known point: 'strict', 'documented' or 'failed'."""
    kinds = {(f["solution"], f["kind"]) for f in verdict.findings}
    out = []
    for check in verdict.solutions:
        if check.status not in CHECKED_STATUSES or rec.known_solutions[check.index].point is None:
            continue
        if check.strict_pass:
            out.append((check.index, "strict"))
        elif check.documented and (check.index, "documented_discrepancy") in kinds:
            out.append((check.index, "documented"))
        else:
            out.append((check.index, "failed"))
    return out
