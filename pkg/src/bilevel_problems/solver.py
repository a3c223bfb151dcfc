"""Baseline nested bilevel solver and the KKT/MPCC single-level model.

The solver is a benchmark baseline, not a published algorithm: seeded
multistart sampling of x, a compass (pattern) search polishing the best
starts, and the lower-level oracle as the inner solver. Upper-level
constraint violation is penalized in the merit function.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np
from scipy.optimize import linprog

from .core import Deriv, EvalSelector, Func, Point, ProblemDefinition, evaluate
from .errors import BudgetExhausted, DimensionMismatch, NoFeasiblePoint, NotSmooth
from .validation import OracleConfig, feasibility, lower_level_oracle

TIE_TOL = 1e-8
FEAS_TOL = 1e-6

_F = EvalSelector(Func.UpperObjective)
_G = EvalSelector(Func.UpperConstraints)
_fY = EvalSelector(Func.LowerObjective, Deriv.Dy)
_g = EvalSelector(Func.LowerConstraints)
_gY = EvalSelector(Func.LowerConstraints, Deriv.Dy)


@dataclass(frozen=True)
class SolveConfig:
    multistarts: int = 50
    # compass search is run from this many of the best starts
    polish: int = 5
    penalty: float = 1e4
    seed: int = 0
    budget: int = 5000  # inner solves
    step_tol: float = 1e-7
    inner: OracleConfig = OracleConfig(grid_small=101, grid_medium=21, multistarts=5, refine_from=2)

    def __post_init__(self):
        if self.budget <= 0 or self.penalty <= 0:
            raise ValueError("budget and penalty must be positive")
        if self.multistarts < 1 or self.polish < 1:
            raise ValueError("multistarts and polish must be at least 1")


@dataclass
class SolveResult:
    x: np.ndarray
    y: np.ndarray
    F: float
    f: float
    complete: bool
    evaluations: int
    trace: list = field(default_factory=list)

    def as_dict(self) -> dict:
        return {
            "x": self.x.tolist(),
            "y": self.y.tolist(),
            "F": self.F,
            "f": self.f,
            "complete": self.complete,
            "evaluations": self.evaluations,
        }


class _Budget(Exception):
    pass


class _Nested:
    """Merit of x: F(x, y(x)) + penalty * upper violation, y(x) optimistic."""

    def __init__(self, problem: ProblemDefinition, config: SolveConfig):
        self.problem, self.config = problem, config
        self.cache: dict = {}
        self.evaluations = 0

    def inner(self, x):
        key = tuple(x.tolist())
        if key in self.cache:
            return self.cache[key]
        if self.evaluations >= self.config.budget:
            raise _Budget
        self.evaluations += 1
        try:
            res = lower_level_oracle(self.problem, x, self.config.inner)
        except NoFeasiblePoint:
            self.cache[key] = None
            return None
        best = None
        for f, y in res.candidates:
            if f > res.f + TIE_TOL:
                break
            p = Point(x, y)
            F = float(evaluate(self.problem, p, _F)[0, 0])
            up, lo = feasibility(self.problem, p)
            merit = F + self.config.penalty * up
            if best is None or merit < best[0]:
                best = (merit, F, f, np.asarray(y, dtype=float), up, lo)
        self.cache[key] = best
        return best

    def merit(self, x) -> float:
        out = self.inner(x)
        return np.inf if out is None else out[0]


def _directions(n: int):
    """Coordinate directions first, then pairwise diagonals, which let the
    search slide along active constraints that are not axis aligned."""
    eye = np.eye(n)
    coord = [s * eye[i] for i in range(n) for s in (1.0, -1.0)]
    diag = [
        a * eye[i] + b * eye[j]
        for i in range(n) for j in range(i + 1, n)
        for a in (1.0, -1.0) for b in (1.0, -1.0)
    ]
    return coord, diag


def _compass(nested: _Nested, x0, box, step_tol):
    lo, hi = box[:, 0], box[:, 1]
    x = x0.copy()
    fx = nested.merit(x)
    # one scalar step keeps diagonal polls parallel to 45 degree edges
    step = 0.25 * float(np.max(hi - lo))
    coord, diag = _directions(x.size)

    def poll(dirs):
        for d in dirs:
            cand = np.clip(x + d * step, lo, hi)
            if np.array_equal(cand, x):
                continue
            fc = nested.merit(cand)
            if fc < fx:
                return cand, fc
        return None

    while step > step_tol:
        hit = poll(coord) or poll(diag)
        if hit is None:
            step = step / 2
        else:
            x, fx = hit
    return x, fx


def outer_box(problem: ProblemDefinition) -> np.ndarray:
    """Search box for x: the range of each x_i over the linear upper rows that
    involve x only, found by LP; sides left unbounded fall back to the domain box.
    """
    nx = problem.dims.n_x
    box = problem.domain_box[:nx].copy()
    rows = []
    for r in problem.G:
        if not (getattr(r, "linear", False) and hasattr(r, "poly")):
            continue
        a, c = r.poly.linear_coefficients()
        if np.any(a[nx:] != 0) or not np.any(a[:nx] != 0):
            continue
        rows.append((a[:nx], -c))
    if not rows:
        return box
    A = np.array([a for a, _ in rows])
    b = np.array([c for _, c in rows])
    for i in range(nx):
        for side, sign in ((0, 1.0), (1, -1.0)):
            cost = np.zeros(nx)
            cost[i] = sign
            res = linprog(cost, A_ub=A, b_ub=b, bounds=[(None, None)] * nx, method="highs")
            if res.status == 0:
                box[i, side] = res.x[i]
    if problem.domain_restricted:
        box[:, 0] = np.maximum(box[:, 0], problem.domain_box[:nx, 0])
        box[:, 1] = np.minimum(box[:, 1], problem.domain_box[:nx, 1])
    return box


def solve_nested(problem: ProblemDefinition, config: SolveConfig = SolveConfig()) -> SolveResult:
    """Best feasible (x, y) found; y is an optimistic lower-level optimum at x.

    Deterministic for a fixed config. When the inner-solve budget runs out the
    best point so far is returned with ``complete = False``; BudgetExhausted is
    raised only if no feasible point was seen by then.
    """
    box = outer_box(problem)
    rng = np.random.default_rng(config.seed)
    starts = [box.mean(axis=1)] + [rng.uniform(box[:, 0], box[:, 1]) for _ in range(config.multistarts - 1)]
    nested = _Nested(problem, config)
    trace = []
    complete = True
    try:
        scored = []
        for k, x0 in enumerate(starts):
            m = nested.merit(x0)
            trace.append(("start", k, x0.tolist(), m))
            scored.append((m, k))
        scored.sort()
        for m, k in scored[: config.polish]:
            if not np.isfinite(m):
                continue
            x, fx = _compass(nested, starts[k], box, config.step_tol)
            trace.append(("polish", k, x.tolist(), fx))
    except _Budget:
        complete = False
    best = None
    # the cache holds every visited x; pick the best feasible one, ties by order
    for key, val in nested.cache.items():
        if val is None or val[4] > FEAS_TOL or val[5] > FEAS_TOL:
            continue
        if best is None or val[1] < best[1][1]:
            best = (key, val)
    if best is None:
        if not complete:
            raise BudgetExhausted(f"{problem.name}: budget spent before a feasible point was found")
        raise NoFeasiblePoint(f"{problem.name}: no feasible point found")
    key, (_, F, f, y, _, _) = best
    return SolveResult(np.array(key), y, F, f, complete, nested.evaluations, trace)


# ---------------------------------------------------------------------------
# MPCC reformulation
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class MpccModel:
    """Lower level replaced by its KKT system in the variables (x, y, lam).

    Constraints: G <= 0, g <= 0, lam >= 0, lam_i g_i = 0 and the stationarity
    map grad_y f + (grad_y g)^T lam = 0.
    """

    problem: ProblemDefinition

    @property
    def n_x(self) -> int:
        return self.problem.dims.n_x

    @property
    def n_y(self) -> int:
        return self.problem.dims.n_y

    @property
    def n_lambda(self) -> int:
        return self.problem.dims.n_g

    @property
    def n_variables(self) -> int:
        return self.n_x + self.n_y + self.n_lambda

    def residuals(self, x, y, lam) -> dict:
        lam = np.atleast_1d(np.asarray(lam, dtype=float)).ravel()
        if lam.size != self.n_lambda:
            raise DimensionMismatch(f"expected {self.n_lambda} multipliers, got {lam.size}")
        p = Point(x, y)
        fy = evaluate(self.problem, p, _fY).ravel()
        gv = evaluate(self.problem, p, _g).ravel()
        J = evaluate(self.problem, p, _gY)
        Gv = evaluate(self.problem, p, _G).ravel()
        station = fy + J.T @ lam if lam.size else fy
        return {
            "stationarity": station,
            "G": Gv,
            "g": gv,
            "lambda": lam,
            "complementarity": lam * gv,
        }


def build_mpcc(problem: ProblemDefinition) -> MpccModel:
    if problem.nonsmooth:
        raise NotSmooth(f"{problem.name} is flagged nonsmooth")
    return MpccModel(problem)


def mpcc_residual(model: MpccModel, x, y, lam) -> float:
    """Stationarity norm plus feasibility, sign and complementarity violations."""
    r = model.residuals(x, y, lam)
    return float(
        np.linalg.norm(r["stationarity"])
        + np.sum(np.abs(r["complementarity"]))
        + np.sum(np.maximum(0.0, r["G"]))
        + np.sum(np.maximum(0.0, r["g"]))
        + np.sum(np.maximum(0.0, -r["lambda"]))
    )


def dump_mpcc(model: MpccModel, x, y, lam) -> str:
    """Plain-text dump of the model and its residual blocks at one point."""
    r = model.residuals(x, y, lam)
    lines = [
        f"mpcc {model.problem.name}",
        f"variables n_x={model.n_x} n_y={model.n_y} n_lambda={model.n_lambda}",
        "x " + " ".join(repr(float(v)) for v in np.atleast_1d(x)),
        "y " + " ".join(repr(float(v)) for v in np.atleast_1d(y)),
    ]
    for name in ("lambda", "stationarity", "G", "g", "complementarity"):
        lines.append(name + " " + " ".join(repr(float(v)) for v in r[name]))
    lines.append(f"residual {mpcc_residual(model, x, y, lam)!r}")
    return "\n".join(lines) + "\n"
