"""Problem registry: metadata records, known solutions and lookup."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Iterable

import numpy as np

from .core import Dimensions, Piece, Point, ProblemDefinition, as_piece, split_equalities
from .errors import ParameterOutOfRange, UnknownProblem
from .poly import Poly, variables

DEFAULT_EXTENT = 10.0

STATUSES = ("global", "local", "best_known", "approximate", "value_only", "none")

RECORD_FLAGS = (
    "has_equality_origin",
    "nonsmooth",
    "lower_level_kkt_checkable",
    "no_optimal_solution",
)


@dataclass(frozen=True)
class ParamSpec:
    name: str
    default: float
    lower: float | None = None
    lower_inclusive: bool = True
    description: str = ""

    def check(self, value: float):
        if self.lower is None:
            return
        ok = value >= self.lower if self.lower_inclusive else value > self.lower
        if not ok:
            op = ">=" if self.lower_inclusive else ">"
            raise ParameterOutOfRange(f"{self.name}={value} violates {self.name} {op} {self.lower}")


@dataclass(frozen=True)
class KnownSolution:
    x: tuple | None
    y: tuple | None
    status: str
    claimed_F: float | None = None
    claimed_f: float | None = None
    label: str = ""
    note: str = ""
    family: str = ""
    value_tol: float | None = None

    def __post_init__(self):
        if self.status not in STATUSES:
            raise ValueError(f"unknown status {self.status!r}")
        if (self.x is None) != (self.y is None):
            raise ValueError("x and y must both be given or both omitted")
        if self.status == "value_only" and self.x is not None:
            raise ValueError("value_only solutions carry no point")

    @property
    def point(self) -> Point | None:
        if self.x is None:
            return None
        return Point(self.x, self.y)


@dataclass(frozen=True)
class ProblemRecord:
    name: str
    source_ref: str
    labels: tuple
    dims: Dimensions
    params: tuple = ()
    known_solutions: tuple = ()
    claimed_F: float | None = None
    claimed_f: float | None = None
    flags: frozenset = frozenset()
    notes: tuple = ()
    solution_ref: str = ""
    equality_dims: tuple | None = None
    equality_labels: tuple = ("O", "O")

    @property
    def label_string(self) -> str:
        """Labels for F/G/f/g joined by hyphens, e.g. ``N-O-N-L``."""
        return "-".join(self.labels)

    @property
    def full_labels(self) -> str:
        """Six characters for F/G/H/f/g/h, equality rows labelled separately."""
        F, G, f, g = self.labels
        H, h = self.equality_labels
        return F + G + H + f + g + h

    def param_defaults(self) -> dict:
        return {p.name: p.default for p in self.params}


class Vec(list):
    """List of polynomials with elementwise arithmetic (``x - 50`` etc.)."""

    def _zip(self, other):
        if isinstance(other, (list, tuple)):
            if len(other) != len(self):
                raise ValueError("vector length mismatch")
            return other
        return [other] * len(self)

    def __neg__(self):
        return Vec(-a for a in self)

    def __add__(self, other):
        return Vec(a + b for a, b in zip(self, self._zip(other)))

    __radd__ = __add__

    def __sub__(self, other):
        return Vec(a - b for a, b in zip(self, self._zip(other)))

    def __rsub__(self, other):
        return Vec(b - a for a, b in zip(self, self._zip(other)))

    def __mul__(self, other):
        return Vec(a * b for a, b in zip(self, self._zip(other)))

    __rmul__ = __mul__

    def dot(self, other):
        return sum((a * b for a, b in zip(self, other)), 0.0)

    def sumsq(self):
        return sum((a * a for a in self), 0.0)


def _flatten(rows) -> list:
    out = []
    for r in rows:
        if isinstance(r, (list, tuple)):
            out.extend(_flatten(r))
        else:
            out.append(r)
    return out


class Builder:
    """Collects one problem's formulas and metadata for a parameter binding."""

    def __init__(self, nx: int, ny: int, params: dict):
        self.nx, self.ny = nx, ny
        self.n = nx + ny
        xs, ys = variables(nx, ny)
        self.x, self.y = Vec(xs), Vec(ys)
        self.p = dict(params)
        self.F = self.f = None
        self.G, self.g = [], []
        self.H, self.h = [], []
        self.declared = np.tile([-math.inf, math.inf], (self.n, 1))
        self.declared_lower = None
        self.smoothness = set()
        self.kinks = None
        self.solutions = []
        self.claimed = (None, None)
        self.notes = []
        self.kkt_checkable = True
        self.no_optimal_solution = False

    def const(self, c: float) -> Poly:
        return Poly.const(self.n, c)

    def ones(self, k: int, c: float = 1.0) -> list:
        return [c] * k

    def upper(self, F, G=()):
        self.F = as_piece(F)
        self.G = [as_piece(r) for r in _flatten(G)]

    def lower(self, f, g=()):
        self.f = as_piece(f)
        self.g = [as_piece(r) for r in _flatten(g)]

    def equalities(self, H=(), h=()):
        """Equality rows, appended after G / g as ``[+H; -H]`` blocks."""
        self.H = [as_piece(r) for r in _flatten(H)]
        self.h = [as_piece(r) for r in _flatten(h)]

    def box(self, index: int, lo: float = -math.inf, hi: float = math.inf):
        """Declare a domain interval for variable ``index`` of z = (x, y)."""
        self.declared[index] = [max(self.declared[index, 0], lo), min(self.declared[index, 1], hi)]

    def lower_search_box(self, bounds):
        self.declared_lower = np.asarray(bounds, dtype=float)

    def flag(self, *names):
        self.smoothness.update(names)

    def solution(self, x, y, status, F=None, f=None, label="", note="", family="", value_tol=None):
        self.solutions.append(
            KnownSolution(
                tuple(float(v) for v in np.atleast_1d(x)),
                tuple(float(v) for v in np.atleast_1d(y)),
                status, F, f, label, note, family, value_tol,
            )
        )

    def values_only(self, F=None, f=None, label="", note=""):
        self.solutions.append(KnownSolution(None, None, "value_only", F, f, label, note))

    def claim(self, F=None, f=None):
        self.claimed = (F, f)

    def note(self, text: str):
        self.notes.append(text)


def implied_bounds(rows: Iterable[Piece], n: int) -> np.ndarray:
    """Bounds from rows of the form ``a * z_j + c <= 0``."""
    out = np.tile([-math.inf, math.inf], (n, 1))
    for r in rows:
        if not (getattr(r, "linear", False) and hasattr(r, "poly")):
            continue
        a, c = r.poly.linear_coefficients()
        nz = np.flatnonzero(a)
        if nz.size != 1:
            continue
        j = nz[0]
        t = -c / a[j]
        if a[j] > 0:
            out[j, 1] = min(out[j, 1], t)
        else:
            out[j, 0] = max(out[j, 0], t)
    return out


def _fill(box: np.ndarray) -> np.ndarray:
    box = box.copy()
    for row in box:
        lo, hi = row
        if math.isinf(lo) and math.isinf(hi):
            row[:] = (-DEFAULT_EXTENT, DEFAULT_EXTENT)
        elif math.isinf(lo):
            row[0] = min(-DEFAULT_EXTENT, hi - 2 * DEFAULT_EXTENT)
        elif math.isinf(hi):
            row[1] = max(DEFAULT_EXTENT, lo + 2 * DEFAULT_EXTENT)
    return box


def _intersect(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    return np.column_stack([np.maximum(a[:, 0], b[:, 0]), np.minimum(a[:, 1], b[:, 1])])


@dataclass(frozen=True)
class _Entry:
    name: str
    source_ref: str
    nx: int
    ny: int
    build: Callable
    params: tuple = ()
    solution_ref: str = ""
    aliases: tuple = ()


_REGISTRY: dict[str, _Entry] = {}
_ALIASES: dict[str, str] = {}
_CACHE: dict = {}


def problem(name, source_ref, nx, ny, params=(), solution_ref="", aliases=()):
    """Decorator registering a problem builder ``fn(builder) -> None``."""

    def deco(fn):
        if name in _REGISTRY:
            raise ValueError(f"duplicate problem {name}")
        _REGISTRY[name] = _Entry(name, source_ref, nx, ny, fn, tuple(params), solution_ref, tuple(aliases))
        for a in aliases:
            _ALIASES[a] = name
        return fn

    return deco


def _resolve(name: str) -> _Entry:
    _load()
    key = _ALIASES.get(name, name)
    try:
        return _REGISTRY[key]
    except KeyError:
        raise UnknownProblem(f"unknown problem {name!r}") from None


def _bind(entry: _Entry, overrides: dict | None) -> dict:
    specs = {p.name: p for p in entry.params}
    values = {p.name: p.default for p in entry.params}
    for k, v in (overrides or {}).items():
        if k not in specs:
            raise ParameterOutOfRange(f"{entry.name} has no parameter {k!r}")
        specs[k].check(float(v))
        values[k] = float(v)
    return values


def _label(pieces) -> str:
    if not pieces:
        return "O"
    return "L" if all(p.linear for p in pieces) else "N"


def _construct(entry: _Entry, values: dict):
    b = Builder(entry.nx, entry.ny, values)
    entry.build(b)
    if b.F is None or b.f is None:
        raise ValueError(f"{entry.name}: builder did not set both objectives")
    n, nx = b.n, b.nx
    split_H, split_h = split_equalities(b.H, b.h)
    G, g = tuple(b.G) + split_H, tuple(b.g) + split_h
    dims = Dimensions(nx, entry.ny, len(G), len(g))

    implied = _intersect(implied_bounds(G, n), implied_bounds(g, n))
    domain = _fill(_intersect(b.declared, implied))
    if b.declared_lower is not None:
        lower = b.declared_lower
    else:
        from_g = implied_bounds(g, n)[nx:]
        from_G = implied_bounds(G, n)[nx:]
        lower = from_g.copy()
        for j in range(entry.ny):
            for side in (0, 1):
                if math.isinf(lower[j, side]):
                    lower[j, side] = from_G[j, side]
        lower = _fill(_intersect(lower, b.declared[nx:]))

    definition = ProblemDefinition(
        name=entry.name,
        dims=dims,
        F=b.F,
        G=G,
        f=b.f,
        g=g,
        params=dict(values),
        domain_box=domain,
        lower_box=lower,
        smoothness_flags=frozenset(b.smoothness),
        kink_distance=b.kinks,
    )
    flags = set()
    if b.H or b.h:
        flags.add("has_equality_origin")
    if definition.nonsmooth:
        flags.add("nonsmooth")
    if b.kkt_checkable:
        flags.add("lower_level_kkt_checkable")
    if b.no_optimal_solution:
        flags.add("no_optimal_solution")
    for s in b.solutions:
        if s.x is not None and (len(s.x) != nx or len(s.y) != entry.ny):
            raise ValueError(f"{entry.name}: known solution has wrong dimensions")
    record = ProblemRecord(
        name=entry.name,
        source_ref=entry.source_ref,
        labels=(_label([b.F]), _label(b.G), _label([b.f]), _label(b.g)),
        equality_labels=(_label(b.H), _label(b.h)),
        dims=dims,
        params=entry.params,
        known_solutions=tuple(b.solutions),
        claimed_F=b.claimed[0],
        claimed_f=b.claimed[1],
        flags=frozenset(flags),
        notes=tuple(b.notes),
        solution_ref=entry.solution_ref,
        equality_dims=(len(b.H), len(b.h)) if (b.H or b.h) else None,
    )
    return definition, record


def instantiate_pair(name: str, param_overrides: dict | None = None):
    entry = _resolve(name)
    values = _bind(entry, param_overrides)
    key = (entry.name, tuple(sorted(values.items())))
    if key not in _CACHE:
        _CACHE[key] = _construct(entry, values)
    return _CACHE[key]


def lookup(name: str, param_overrides: dict | None = None):
    """Return ``(ProblemDefinition, ProblemRecord)`` for ``name``."""
    return instantiate_pair(name, param_overrides)


def instantiate(name: str, param_overrides: dict | None = None) -> ProblemDefinition:
    return instantiate_pair(name, param_overrides)[0]


def record(name: str, param_overrides: dict | None = None) -> ProblemRecord:
    return instantiate_pair(name, param_overrides)[1]


def names() -> list[str]:
    _load()
    return sorted(_REGISTRY)


def aliases() -> dict[str, str]:
    _load()
    return dict(_ALIASES)


def list_problems(predicate: Callable[[ProblemRecord], bool] | None = None) -> list[str]:
    """Names (lexicographic) whose default-parameter record satisfies ``predicate``."""
    out = []
    for n in names():
        if predicate is None or predicate(record(n)):
            out.append(n)
    return out


def records() -> list[ProblemRecord]:
    return [record(n) for n in names()]


def registry_size() -> int:
    return len(names())


_loaded = False


def _load():
    global _loaded
    if not _loaded:
        _loaded = True
        from . import problems  # noqa: F401  (registers everything)
