"""Problem data model, evaluation selectors and the array-shape contract.

Every problem is stored in inequality form

    min F(x, y)  s.t.  G(x, y) <= 0,  y in argmin { f(x, y) : g(x, y) <= 0 }

and evaluated through :func:`evaluate` with a ``(func, deriv)`` selector.
Results are always 2-D arrays: scalars are 1x1, vectors are columns, an
empty constraint block is a 0x0 array.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Callable, Mapping, Sequence

import numpy as np

from .errors import DimensionMismatch, DomainViolation
from .poly import Poly


class Func(enum.Enum):
    UpperObjective = "F"
    UpperConstraints = "G"
    LowerObjective = "f"
    LowerConstraints = "g"

    @property
    def is_constraint(self) -> bool:
        return self in (Func.UpperConstraints, Func.LowerConstraints)


class Deriv(enum.Enum):
    Value = ""
    Dx = "x"
    Dy = "y"
    Dxx = "xx"
    Dxy = "xy"
    Dyy = "yy"

    @property
    def order(self) -> int:
        return len(self.value)


@dataclass(frozen=True)
class EvalSelector:
    func: Func
    deriv: Deriv = Deriv.Value

    @classmethod
    def parse(cls, keyf: str, keyxy: str | None = None) -> "EvalSelector":
        """Build from the string keys ``'F','G','f','g'`` and ``None/'x'/.../'yy'``."""
        return cls(Func(keyf), Deriv(keyxy or ""))

    @property
    def key(self) -> str:
        return self.func.value + self.deriv.value

    def __str__(self):
        return f"{self.func.value}{',' + self.deriv.value if self.deriv.value else ''}"


ALL_SELECTORS = tuple(EvalSelector(fn, d) for fn in Func for d in Deriv)
DERIVATIVE_SELECTORS = tuple(s for s in ALL_SELECTORS if s.deriv is not Deriv.Value)


@dataclass(frozen=True)
class Dimensions:
    n_x: int
    n_y: int
    n_G: int
    n_g: int

    def __post_init__(self):
        for name in ("n_x", "n_y", "n_G", "n_g"):
            if getattr(self, name) < 0:
                raise ValueError(f"{name} must be nonnegative")

    @property
    def n(self) -> int:
        return self.n_x + self.n_y

    def as_tuple(self):
        return (self.n_x, self.n_y, self.n_G, self.n_g)


def shape_of(dims: Dimensions, selector: EvalSelector) -> tuple[int, int]:
    """Exact result shape for ``selector``; ``(0, 0)`` means empty."""
    nx, ny = dims.n_x, dims.n_y
    fn, d = selector.func, selector.deriv
    if fn.is_constraint:
        m = dims.n_G if fn is Func.UpperConstraints else dims.n_g
        if m == 0:
            return (0, 0)
    else:
        m = 1
    rows_cols = {
        Deriv.Value: (1, 1),
        Deriv.Dx: (nx, 1),
        Deriv.Dy: (ny, 1),
        Deriv.Dxx: (nx, nx),
        Deriv.Dxy: (ny, nx),
        Deriv.Dyy: (ny, ny),
    }
    if not fn.is_constraint:
        return rows_cols[d]
    if d is Deriv.Value:
        return (m, 1)
    if d is Deriv.Dx:
        return (m, nx)
    if d is Deriv.Dy:
        return (m, ny)
    r, c = rows_cols[d]
    return (m * r, c)


@dataclass(frozen=True)
class Point:
    x: np.ndarray
    y: np.ndarray

    def __init__(self, x, y):
        object.__setattr__(self, "x", np.atleast_1d(np.asarray(x, dtype=float)).ravel())
        object.__setattr__(self, "y", np.atleast_1d(np.asarray(y, dtype=float)).ravel())

    @classmethod
    def from_z(cls, z, n_x: int) -> "Point":
        z = np.asarray(z, dtype=float)
        return cls(z[:n_x], z[n_x:])

    @property
    def z(self) -> np.ndarray:
        return np.concatenate([self.x, self.y])

    def __eq__(self, other):
        return (
            isinstance(other, Point)
            and np.array_equal(self.x, other.x)
            and np.array_equal(self.y, other.y)
        )

    def __hash__(self):
        return hash((tuple(self.x), tuple(self.y)))

    def __repr__(self):
        return f"Point(x={self.x.tolist()}, y={self.y.tolist()})"


# ---------------------------------------------------------------------------
# scalar pieces
# ---------------------------------------------------------------------------


class Piece:
    """A scalar function of z = (x, y) with first and second derivatives.

    ``value`` accepts batches ``(..., n)``; ``grad`` and ``hess`` take one point.
    """

    linear = False

    def value(self, z):
        raise NotImplementedError

    def grad(self, z) -> np.ndarray:
        raise NotImplementedError

    def hess(self, z) -> np.ndarray:
        raise NotImplementedError


class PolyPiece(Piece):
    def __init__(self, poly: Poly):
        self.poly = poly
        self.linear = poly.is_linear()

    def value(self, z):
        return self.poly(z)

    def grad(self, z):
        return self.poly.grad(z)

    def hess(self, z):
        return self.poly.hess(z)


class Smooth(Piece):
    """Hand-differentiated piece built from three callables."""

    def __init__(self, value: Callable, grad: Callable, hess: Callable):
        self._value, self._grad, self._hess = value, grad, hess

    def value(self, z):
        return self._value(np.asarray(z, dtype=float))

    def grad(self, z):
        return np.asarray(self._grad(np.asarray(z, dtype=float)), dtype=float)

    def hess(self, z):
        h = np.asarray(self._hess(np.asarray(z, dtype=float)), dtype=float)
        # mirror the upper triangle so Hessians are exactly symmetric
        return np.triu(h) + np.triu(h, 1).T


class Negated(Piece):
    def __init__(self, inner: Piece):
        self.inner = inner
        self.linear = inner.linear

    def value(self, z):
        return -self.inner.value(z)

    def grad(self, z):
        return -self.inner.grad(z)

    def hess(self, z):
        return -self.inner.hess(z)


def as_piece(obj) -> Piece:
    if isinstance(obj, Piece):
        return obj
    if isinstance(obj, Poly):
        return PolyPiece(obj)
    raise TypeError(f"cannot use {type(obj).__name__} as a problem function")


def split_equalities(
    upper_eq: Sequence[Piece] = (), lower_eq: Sequence[Piece] = ()
) -> tuple[tuple[Piece, ...], tuple[Piece, ...]]:
    """Rewrite equality rows ``H = 0`` / ``h = 0`` as inequality rows.

    Each block becomes ``[+H; -H]`` (all +H rows first, then the negated
    copies), so the result has ``2 * n_H`` and ``2 * n_h`` rows.
    """

    def split(block):
        block = tuple(as_piece(p) for p in block)
        return block + tuple(Negated(p) for p in block)

    return split(upper_eq), split(lower_eq)


# ---------------------------------------------------------------------------
# problem definition
# ---------------------------------------------------------------------------

SMOOTHNESS_FLAGS = frozenset({"nonsmooth_objective", "piecewise", "domain_restricted"})


@dataclass(frozen=True, eq=False)
class ProblemDefinition:
    name: str
    dims: Dimensions
    F: Piece
    G: tuple
    f: Piece
    g: tuple
    params: Mapping[str, float] = field(default_factory=dict)
    domain_box: np.ndarray = None
    lower_box: np.ndarray = None
    smoothness_flags: frozenset = frozenset()
    # distance from z to the set where some formula is not twice differentiable
    kink_distance: Callable | None = None

    def __post_init__(self):
        unknown = set(self.smoothness_flags) - SMOOTHNESS_FLAGS
        if unknown:
            raise ValueError(f"unknown smoothness flags {unknown}")
        box = np.asarray(self.domain_box, dtype=float)
        if box.shape != (self.dims.n, 2) or np.any(box[:, 0] > box[:, 1]):
            raise ValueError(f"{self.name}: bad domain box")
        object.__setattr__(self, "domain_box", box)
        lb = np.asarray(self.lower_box, dtype=float)
        if lb.shape != (self.dims.n_y, 2):
            raise ValueError(f"{self.name}: bad lower box")
        object.__setattr__(self, "lower_box", lb)

    @property
    def domain_restricted(self) -> bool:
        return "domain_restricted" in self.smoothness_flags

    @property
    def nonsmooth(self) -> bool:
        return bool({"nonsmooth_objective", "piecewise"} & self.smoothness_flags)

    def pieces(self, func: Func):
        return {
            Func.UpperObjective: (self.F,),
            Func.UpperConstraints: self.G,
            Func.LowerObjective: (self.f,),
            Func.LowerConstraints: self.g,
        }[func]

    def check_point(self, point: Point) -> np.ndarray:
        if point.x.size != self.dims.n_x or point.y.size != self.dims.n_y:
            raise DimensionMismatch(
                f"{self.name} expects x in R^{self.dims.n_x}, y in R^{self.dims.n_y}; "
                f"got {point.x.size} and {point.y.size}"
            )
        z = point.z
        if self.domain_restricted and not self.in_domain(z):
            raise DomainViolation(f"{self.name}: point {z.tolist()} outside domain box")
        return z

    def in_domain(self, z) -> bool:
        z = np.asarray(z, dtype=float)
        return bool(np.all(z >= self.domain_box[:, 0]) and np.all(z <= self.domain_box[:, 1]))

    def evaluate(self, point: Point, selector: EvalSelector) -> np.ndarray:
        return evaluate(self, point, selector)

    def values(self, func: Func, z) -> np.ndarray:
        """Batch values at ``z`` of shape ``(N, n)``: ``(N,)`` or ``(N, m)``."""
        z = np.asarray(z, dtype=float)
        pieces = self.pieces(func)
        if not func.is_constraint:
            return np.broadcast_to(pieces[0].value(z), z.shape[:-1]).astype(float)
        if not pieces:
            return np.zeros(z.shape[:-1] + (0,))
        return np.stack(
            [np.broadcast_to(p.value(z), z.shape[:-1]) for p in pieces], axis=-1
        ).astype(float)


def _block(h: np.ndarray, nx: int, deriv: Deriv) -> np.ndarray:
    if deriv is Deriv.Dxx:
        return h[:nx, :nx]
    if deriv is Deriv.Dxy:
        return h[nx:, :nx]
    return h[nx:, nx:]


def evaluate(problem: ProblemDefinition, point: Point, selector: EvalSelector) -> np.ndarray:
    """Value or derivative of one problem function at ``point``.

    Raises DimensionMismatch for wrong vector lengths and DomainViolation for
    domain-restricted problems evaluated outside their domain box.
    """
    z = problem.check_point(point)
    nx = problem.dims.n_x
    fn, d = selector.func, selector.deriv
    pieces = problem.pieces(fn)
    if fn.is_constraint and not pieces:
        return np.zeros((0, 0))
    if d is Deriv.Value:
        vals = np.array([float(p.value(z)) for p in pieces])
        return vals.reshape(-1, 1)
    if d.order == 1:
        sl = slice(0, nx) if d is Deriv.Dx else slice(nx, None)
        grads = np.array([p.grad(z)[sl] for p in pieces])
        if fn.is_constraint:
            return grads
        return grads.reshape(-1, 1)
    blocks = [_block(p.hess(z), nx, d) for p in pieces]
    return np.vstack(blocks)
