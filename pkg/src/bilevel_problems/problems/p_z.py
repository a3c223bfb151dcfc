"""Problems P through Z."""

import numpy as np

from ..registry import problem
from ._pieces import OfAffine, Quotient, power_of_affine, smooth


@problem("PaulaviciusEtal2017a", "PKA17", nx=1, ny=1, solution_ref="PKA17")
def _(b):
    (x,), (y,) = b.x, b.y
    b.upper(x**2 + y**2, [-x - 1, x - 1, -y - 1, y - 1])
    b.lower(x * y**2 - 0.5 * y**4, [-y - 1, y - 1])
    b.solution(0.5, 0, "global")


@problem("PaulaviciusEtal2017b", "PKA17", nx=1, ny=1, solution_ref="PKA17")
def _(b):
    (x,), (y,) = b.x, b.y
    b.upper(x + y, [-x - 1, x - 1, -y - 1, y - 1])
    b.lower(0.5 * x * y**2 - x**3 * y, [-y - 1, y - 1])
    b.solution(-1, -1, "global")


@problem("SahinCiric1998Ex2", "SC98", nx=1, ny=1, solution_ref="SC98")
def _(b):
    (x,), (y,) = b.x, b.y
    b.upper((x - 3) ** 2 + (y - 2) ** 2, [-x, x - 8])
    b.lower((y - 5) ** 2, [-2 * x + y - 1, x - 2 * y + 2, x + 2 * y - 14])
    b.solution(1, 3, "best_known", F=5)
    b.claim(5)


@problem("ShimizuAiyoshi1981Ex1", "SA81", nx=1, ny=1, solution_ref="SA81")
def _(b):
    (x,), (y,) = b.x, b.y
    b.upper(x**2 + (y - 10) ** 2, [x - 15, -x + y, -x])
    b.lower((x + 2 * y - 30) ** 2, [x + y - 20, y - 20, -y])
    b.solution(10, 10, "global")


@problem("ShimizuAiyoshi1981Ex2", "SA81", nx=2, ny=2, solution_ref="SA81")
def _(b):
    x1, x2 = b.x
    y1, y2 = b.y
    b.upper(
        (x1 - 30) ** 2 + (x2 - 20) ** 2 - 20 * y1 + 20 * y2,
        [-x1 - 2 * x2 + 30, x1 + x2 - 25, x2 - 15],
    )
    b.lower((x1 - y1) ** 2 + (x2 - y2) ** 2, [b.y - 10, -b.y])
    b.solution((20, 5), (10, 5), "global")


@problem("ShimizuEtal1997a", "SIB97", nx=1, ny=1)
def _(b):
    (x,), (y,) = b.x, b.y
    b.upper((x - 5) ** 2 + (2 * y + 1) ** 2)
    b.lower((y - 1) ** 2 - 1.5 * x * y, [-3 * x + y + 3, x - 0.5 * y - 4, x + y - 7])
    b.solution(5, 2, "best_known")


@problem("ShimizuEtal1997b", "SIB97", nx=1, ny=1, solution_ref="SIB97")
def _(b):
    (x,), (y,) = b.x, b.y
    b.upper(16 * x**2 + 9 * y**2, [-4 * x + y, -x])
    b.lower(power_of_affine([1, 1], -20, 4), [4 * x + y - 50, -y])
    b.solution(11.25, 5, "global")
    b.solution(7.2, 12.8, "local")


@problem("SinhaMaloDeb2014TP3", "SMD14", nx=2, ny=2, solution_ref="SMD14")
def _(b):
    x1, x2 = b.x
    y1, y2 = b.y
    b.upper(-x1**2 - 3 * x2**2 - 4 * y1 + y2**2, [x1**2 + 2 * x2 - 4, -b.x])
    b.lower(
        2 * x1**2 + y1**2 - 5 * y2,
        [-(x1**2) + 2 * x1 - x2**2 + 2 * y1 - y2 - 3, -x2 - 3 * y1 + 4 * y2 + 4, -b.y],
    )
    b.values_only(-18.6787, -1.0156)
    b.claim(-18.6787, -1.0156)


@problem("SinhaMaloDeb2014TP6", "SMD14", nx=1, ny=2, solution_ref="SMD14")
def _(b):
    (x,) = b.x
    y1, y2 = b.y
    b.upper((x - 1) ** 2 + 2 * y1 - 2 * x, [-x])
    b.lower(
        (2 * y1 - 4) ** 2 + (2 * y2 - 1) ** 2 + x * y1,
        [
            4 * x + 5 * y1 + 4 * y2 - 12,
            4 * y2 - 4 * x - 5 * y1 + 4,
            4 * x - 4 * y1 + 5 * y2 - 4,
            4 * y1 - 4 * x + 5 * y2 - 4,
            -b.y,
        ],
    )
    b.values_only(-1.2091, 7.6145)
    b.claim(-1.2091, 7.6145)


@problem("SinhaMaloDeb2014TP7", "SMD14", nx=2, ny=2, solution_ref="SMD14")
def _(b):
    x1, x2 = b.x
    y1, y2 = b.y
    num = (x1 + y1) * (x2 + y2)
    den = 1 + x1 * y1 + x2 * y2
    b.upper(Quotient(num, den, scale=-1.0), [x1**2 + x2**2 - 100, x1 - x2, -b.x])
    b.lower(Quotient(num, den), [b.y - b.x, -b.y])
    # nonnegative variables keep the denominator at least 1
    b.flag("domain_restricted")
    b.values_only(-1.96, 1.96)
    b.claim(-1.96, 1.96)


@problem("SinhaMaloDeb2014TP8", "SMD14", nx=2, ny=2, solution_ref="SMD14")
def _(b):
    x1, x2 = b.x
    y1, y2 = b.y
    c = np.array([2.0, 2.0, -3.0, -3.0])
    F = OfAffine(c, -60.0, np.abs, np.sign, lambda t: np.zeros_like(np.asarray(t, dtype=float)))
    b.upper(F, [x1 + x2 + y1 - 2 * y2 - 40, b.x - 50, -b.x])
    b.lower(
        (y1 - x1 + 20) ** 2 + (y2 - x2 + 20) ** 2,
        [2 * b.y - b.x + 10, b.y - 20, -b.y - 10],
    )
    b.flag("nonsmooth_objective")
    b.kinks = lambda z: abs(float(F.arg(z))) / np.linalg.norm(c)
    b.note("the first constraint block is printed with the lower-level symbol g and read as G")
    b.values_only(0.0, 100.0)
    b.claim(0.0, 100.0)


# -- cosine-product test problems ---------------------------------------------

_N = 10
_ROOT = np.sqrt(np.arange(1, _N + 1))


def _neg_cos_product(t):
    """Value, gradient and Hessian of -prod_i cos(t_i / sqrt(i)) at one point."""
    u = t / _ROOT
    c, s = np.cos(u), np.sin(u)
    idx = np.arange(_N)
    excl1 = np.array([np.prod(c[idx != j]) for j in idx])
    P = np.prod(c)
    grad = s / _ROOT * excl1
    hess = np.empty((_N, _N))
    for j in idx:
        for k in idx:
            if j == k:
                hess[j, k] = P / (j + 1)
            else:
                rest = np.prod(c[(idx != j) & (idx != k)])
                hess[j, k] = -s[j] * s[k] / (_ROOT[j] * _ROOT[k]) * rest
    return -P, grad, hess


def _tp9_f():
    # exp(B(y) S(x)) with B = 1 + |y|^2/400 - prod cos(y_i/sqrt(i)), S = |x|^2
    def value(z):
        x, y = z[..., :_N], z[..., _N:]
        B = 1 + np.sum(y**2, axis=-1) / 400 - np.prod(np.cos(y / _ROOT), axis=-1)
        return np.exp(B * np.sum(x**2, axis=-1))

    def parts(z):
        x, y = z[:_N], z[_N:]
        q, dq, hq = _neg_cos_product(y)
        B = 1 + y @ y / 400 + q
        By = y / 200 + dq
        Byy = np.eye(_N) / 200 + hq
        S = x @ x
        return x, B, By, Byy, S, np.exp(B * S)

    def grad(z):
        x, B, By, _, S, E = parts(z)
        return np.concatenate([E * B * 2 * x, E * S * By])

    def hess(z):
        x, B, By, Byy, S, E = parts(z)
        h = np.empty((2 * _N, 2 * _N))
        h[:_N, :_N] = E * (4 * B**2 * np.outer(x, x) + 2 * B * np.eye(_N))
        h[:_N, _N:] = E * 2 * (S * B + 1) * np.outer(x, By)
        h[_N:, :_N] = h[:_N, _N:].T
        h[_N:, _N:] = E * (S**2 * np.outer(By, By) + S * Byy)
        return h

    return smooth(value, grad, hess)


def _tp10_f():
    # exp(A(w)) with w_i = x_i y_i, A = 1 + |w|^2/4000 - prod cos(w_i/sqrt(i))
    def value(z):
        w = z[..., :_N] * z[..., _N:]
        A = 1 + np.sum(w**2, axis=-1) / 4000 - np.prod(np.cos(w / _ROOT), axis=-1)
        return np.exp(A)

    def parts(z):
        x, y = z[:_N], z[_N:]
        w = x * y
        q, dq, hq = _neg_cos_product(w)
        A = 1 + w @ w / 4000 + q
        Aw = w / 2000 + dq
        Aww = np.eye(_N) / 2000 + hq
        J = np.hstack([np.diag(y), np.diag(x)])
        gA = J.T @ Aw
        hA = J.T @ Aww @ J
        i = np.arange(_N)
        hA[i, _N + i] += Aw
        hA[_N + i, i] += Aw
        return np.exp(A), gA, hA

    def grad(z):
        E, gA, _ = parts(z)
        return E * gA

    def hess(z):
        E, gA, hA = parts(z)
        return E * (np.outer(gA, gA) + hA)

    return smooth(value, grad, hess)


def _tp_upper(b):
    return sum(((xi - 1) ** 2 + yi**2 for xi, yi in zip(b.x, b.y)), 0.0)


@problem("SinhaMaloDeb2014TP9", "SMD14", nx=10, ny=10, solution_ref="SMD14")
def _(b):
    b.upper(_tp_upper(b))
    b.lower(_tp9_f(), [b.y - np.pi, -b.y - np.pi])
    # keeps exp(B |x|^2) finite in double precision
    for i in range(_N):
        b.box(i, -2, 2)
    b.values_only(0.0, 1.0)
    b.claim(0.0, 1.0)


@problem("SinhaMaloDeb2014TP10", "SMD14", nx=10, ny=10, solution_ref="SMD14")
def _(b):
    b.upper(_tp_upper(b))
    b.lower(_tp10_f(), [b.y - np.pi, -b.y - np.pi])
    b.values_only(0.0, 1.0)
    b.claim(0.0, 1.0)


@problem("TuyEtal2007", "TMH07", nx=1, ny=1, solution_ref="TMH07")
def _(b):
    (x,), (y,) = b.x, b.y
    b.upper(x**2 + y**2, [-x, -y])
    b.lower(-y, [3 * x + y - 15, x + y - 7, x + 3 * y - 15])
    b.solution(
        4.492188, 1.523438, "best_known",
        note="discrepancy: the printed six-decimal point violates the first lower row by 2e-6",
    )


@problem("Vogel2002", "V02", nx=1, ny=1, solution_ref="V02")
def _(b):
    (x,), (y,) = b.x, b.y
    b.upper((y + 1) ** 2, [-3 - x, x - 2])
    b.lower(y**3 - 3 * y, [x - y])
    b.solution(-2, -2, "global")


@problem("WanWangLv2011", "ZWL11", nx=2, ny=3, solution_ref="ZWL11")
def _(b):
    x1, x2 = b.x
    y1, y2, y3 = b.y
    b.upper((1 + x1 - x2 + 2 * y2) * (8 - x1 - 2 * y1 + y2 + 5 * y3))
    b.lower(
        2 * y1 - y2 + y3,
        [
            -y1 + y2 + y3 - 1,
            2 * x1 - y1 + 2 * y2 - 0.5 * y3 - 1,
            2 * x2 + 2 * y1 - y2 - 0.5 * y3 - 1,
            -b.x,
            -b.y,
        ],
    )
    b.solution((0, 0.75), (0, 0.5, 0), "global")


def _yezhu(name, F):
    @problem(name, "YZ10", nx=1, ny=1, solution_ref="YZ10")
    def _(b):
        (x,), (y,) = b.x, b.y
        b.upper(F(x, y), [-x - 3, x - 2])
        b.lower(y**3 - 3 * y, [x - y])
        b.solution(1, 1, "global")


_yezhu("YeZhu2010Ex42", lambda x, y: (x - 1) ** 2 + y**2)
_yezhu("YeZhu2010Ex43", lambda x, y: (x - 1) ** 2 + (y - 2) ** 2)


@problem("Yezza1996Ex31", "Y96", nx=1, ny=1, solution_ref="Y96")
def _(b):
    (x,), (y,) = b.x, b.y
    b.upper(-(4 * x - 3) * y + 2 * x + 1, [-x, x - 1])
    b.lower(-(1 - 4 * x) * y - 2 * x - 2, [-y, y - 1])
    b.solution(0.25, 0, "global")


@problem("Yezza1996Ex41", "Y96", nx=1, ny=1, solution_ref="Y96")
def _(b):
    (x,), (y,) = b.x, b.y
    b.upper(0.5 * (y - 2) ** 2 + 0.5 * (x - y - 2) ** 2)
    b.lower(0.5 * y**2 + x - y, [-y, y - x])
    b.solution(3, 1, "global")


@problem("Zlobec2001a", "Z01", nx=1, ny=2, solution_ref="Z01")
def _(b):
    (x,) = b.x
    y1, y2 = b.y
    b.upper(-y1 * x**-1)
    b.lower(-y1 - y2, [x + y1, y2 - 1, -b.y])
    # F divides by x
    b.box(0, 0.1, 10)
    b.flag("domain_restricted")
    b.solution(
        1, (1, 0), "global",
        note="discrepancy: x + y1 = 2 > 0 violates the first lower-level row as printed",
    )


@problem("Zlobec2001b", "Z01", nx=1, ny=1)
def _(b):
    (x,), (y,) = b.x, b.y
    b.upper(x + y, [x - 1, -x])
    b.lower(-y, [y - 1, -y])
    b.equalities(h=[x * y])
    b.no_optimal_solution = True
    b.note("the problem has no optimal solution (its feasible set is not closed)")
