"""Finite-difference oracle for the analytic derivatives of every problem.

First derivatives are central differences of values; second derivatives are
central differences of the analytic first derivatives, which keeps the
truncation error near ``eps**2`` and the rounding error near ``1e-16 / eps``.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .core import (
    DERIVATIVE_SELECTORS,
    Deriv,
    EvalSelector,
    Func,
    Point,
    ProblemDefinition,
    evaluate,
    shape_of,
)
from .errors import DomainViolation

# a sampled point is accepted only this far (in units of the step) from a kink
KINK_MARGIN = 1e3


@dataclass(frozen=True)
class FdConfig:
    eps: float = 1e-6
    rel_tol: float = 1e-4
    abs_tol: float = 1e-6
    samples: int = 20
    seed: int = 0
    # give up after this many draws per requested sample
    max_draws_factor: int = 50

    def __post_init__(self):
        if self.eps <= 0 or self.rel_tol <= 0 or self.abs_tol <= 0:
            raise ValueError("eps and tolerances must be positive")
        if self.samples < 1:
            raise ValueError("samples must be at least 1")


def _steps(v: np.ndarray, eps: float) -> np.ndarray:
    return eps * np.maximum(1.0, np.abs(v))


def _perturbed(point: Point, wrt: str, i: int, delta: float) -> Point:
    x, y = point.x.copy(), point.y.copy()
    (x if wrt == "x" else y)[i] += delta
    return Point(x, y)


def _central(problem, point, selector, wrt, eps):
    """Stack d(selector)/d(wrt_i) for each i as the last axis."""
    v = point.x if wrt == "x" else point.y
    h = _steps(v, eps)
    cols = []
    for i in range(v.size):
        plus = evaluate(problem, _perturbed(point, wrt, i, h[i]), selector)
        minus = evaluate(problem, _perturbed(point, wrt, i, -h[i]), selector)
        cols.append((plus - minus) / (2 * h[i]))
    return cols


def fd_first(problem: ProblemDefinition, point: Point, func: Func, wrt: str, eps: float = 1e-6):
    """Central-difference estimate of (func, Dx) or (func, Dy), shaped per shape_of."""
    target = EvalSelector(func, Deriv.Dx if wrt == "x" else Deriv.Dy)
    if shape_of(problem.dims, target) == (0, 0):
        return np.zeros((0, 0))
    cols = _central(problem, point, EvalSelector(func), wrt, eps)
    # each column is an (m, 1) value difference
    jac = np.hstack(cols)
    if func.is_constraint:
        return jac
    return jac.reshape(-1, 1)


def fd_second(problem: ProblemDefinition, point: Point, func: Func, pair: str, eps: float = 1e-6):
    """Differences of analytic gradients: xx and xy vary x, yy varies y."""
    target = EvalSelector(func, Deriv(pair))
    if shape_of(problem.dims, target) == (0, 0):
        return np.zeros((0, 0))
    inner = EvalSelector(func, Deriv.Dx if pair == "xx" else Deriv.Dy)
    wrt = "y" if pair == "yy" else "x"
    cols = _central(problem, point, inner, wrt, eps)
    if not func.is_constraint:
        # gradient columns of length r become the columns of an r x n_wrt block
        return np.hstack(cols)
    # constraint Jacobians are (m, r); block k is the r x n_wrt matrix of row k
    d = np.stack(cols, axis=-1)
    return np.vstack([d[k] for k in range(d.shape[0])])


def fd_derivative(problem, point, selector: EvalSelector, eps: float = 1e-6):
    if selector.deriv.order == 1:
        return fd_first(problem, point, selector.func, selector.deriv.value, eps)
    return fd_second(problem, point, selector.func, selector.deriv.value, eps)


@dataclass
class SelectorCheck:
    key: str
    points: int = 0
    worst_error: float = 0.0
    # error divided by the allowed error; the selector passes iff this is <= 1
    worst_ratio: float = 0.0
    worst_point: list | None = None
    shape_ok: bool = True

    @property
    def passed(self) -> bool:
        return self.shape_ok and self.points > 0 and self.worst_ratio <= 1.0

    def as_dict(self) -> dict:
        return {
            "selector": self.key,
            "points": self.points,
            "worst_error": self.worst_error,
            "worst_ratio": self.worst_ratio,
            "worst_point": self.worst_point,
            "shape_ok": self.shape_ok,
            "passed": self.passed,
        }


@dataclass
class DerivativeCheckReport:
    name: str
    selectors: dict = field(default_factory=dict)
    accepted_points: int = 0
    skipped: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(s.passed for s in self.selectors.values())

    def failures(self) -> list[str]:
        return [k for k, s in self.selectors.items() if not s.passed]

    def as_dict(self) -> dict:
        return {
            "problem": self.name,
            "passed": self.passed,
            "accepted_points": self.accepted_points,
            "skipped": dict(sorted(self.skipped.items())),
            "selectors": [s.as_dict() for s in self.selectors.values()],
        }


def sampling_box(problem: ProblemDefinition, eps: float) -> np.ndarray:
    """Domain box, shrunk so that every FD stencil stays inside it."""
    box = problem.domain_box.copy()
    if problem.domain_restricted:
        margin = 2 * eps * np.maximum(1.0, np.abs(box))
        box[:, 0] += margin[:, 0]
        box[:, 1] -= margin[:, 1]
    return box


def _kink_free(problem, z, eps) -> bool:
    if problem.kink_distance is None:
        return True
    h = float(np.max(_steps(z, eps)))
    return problem.kink_distance(z) >= max(1e-8, KINK_MARGIN * h)


def check_point(problem, point, config: FdConfig, report: DerivativeCheckReport):
    """Compare all derivative selectors at one accepted point."""
    pairs = [
        (sel, evaluate(problem, point, sel), fd_derivative(problem, point, sel, config.eps))
        for sel in DERIVATIVE_SELECTORS
    ]
    for sel, analytic, approx in pairs:
        rec = report.selectors[sel.key]
        rec.points += 1
        if analytic.shape != approx.shape or analytic.shape != shape_of(problem.dims, sel):
            rec.shape_ok = False
            continue
        if analytic.size == 0:
            continue
        diff = np.abs(analytic - approx)
        if np.all(np.isfinite(diff)):
            err = float(np.max(diff))
            scale = float(np.max(np.abs(analytic)))
            ratio = err / max(config.rel_tol * scale, config.abs_tol)
        else:
            err = ratio = float("inf")
        if ratio > rec.worst_ratio or rec.worst_point is None:
            rec.worst_ratio, rec.worst_error = ratio, err
            rec.worst_point = point.z.tolist()


def check_problem(problem: ProblemDefinition, config: FdConfig = FdConfig()) -> DerivativeCheckReport:
    """Sample seeded points in the domain box and check every derivative selector.

    Points too close to a kink, or whose stencil leaves the domain, are skipped
    and counted; sampling continues until ``config.samples`` points are accepted.
    """
    report = DerivativeCheckReport(problem.name)
    for sel in DERIVATIVE_SELECTORS:
        report.selectors[sel.key] = SelectorCheck(sel.key)
    rng = np.random.default_rng(config.seed)
    box = sampling_box(problem, config.eps)
    nx = problem.dims.n_x
    draws = 0
    while report.accepted_points < config.samples and draws < config.max_draws_factor * config.samples:
        draws += 1
        z = rng.uniform(box[:, 0], box[:, 1])
        if not _kink_free(problem, z, config.eps):
            report.skipped["nonsmooth_point"] = report.skipped.get("nonsmooth_point", 0) + 1
            continue
        point = Point.from_z(z, nx)
        try:
            with np.errstate(all="ignore"):
                check_point(problem, point, config, report)
        except DomainViolation:
            report.skipped["domain_violation"] = report.skipped.get("domain_violation", 0) + 1
            continue
        report.accepted_points += 1
    return report
