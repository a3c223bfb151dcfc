"""Problems I through L."""

import numpy as np

from ..registry import ParamSpec, problem
from ._pieces import ExpOf, OfAffine, Sum

# below this base value the 0.4-power term counts as sitting on its kink
KINK_BASE = 1e-6
_A = 0.4


def _pow_exp(u):
    """-exp(-max(u, 0)**0.4)."""
    return -np.exp(-np.maximum(u, 0.0) ** _A)


def _pow_exp_d1(u):
    u = np.asarray(u, dtype=float)
    pos = u > 0
    s = np.where(pos, u, 1.0)
    return np.where(pos, _A * s ** (_A - 1) * np.exp(-(s**_A)), 0.0)


def _pow_exp_d2(u):
    u = np.asarray(u, dtype=float)
    pos = u > 0
    s = np.where(pos, u, 1.0)
    e = np.exp(-(s**_A))
    val = e * (_A * (_A - 1) * s ** (_A - 2) - _A**2 * s ** (2 * _A - 2))
    return np.where(pos, val, 0.0)


def _gauss(v):
    return -0.8 * np.exp(-(v**2))


def _gauss_d1(v):
    return 1.6 * v * np.exp(-(v**2))


def _gauss_d2(v):
    return 1.6 * np.exp(-(v**2)) * (1 - 2 * v**2)


def _lds_objective(b, cu, du, cv, dv):
    """2 - exp(-(c_u.z + d_u)^0.4) - 0.8 exp(-(c_v.z + d_v)^2) on z = (x, y)."""
    u = OfAffine(cu, du, _pow_exp, _pow_exp_d1, _pow_exp_d2)
    v = OfAffine(cv, dv, _gauss, _gauss_d1, _gauss_d2)
    return Sum(b.const(2.0), u, v), u


def _kinks(*terms):
    def distance(z):
        out = np.inf
        for t in terms:
            u = float(t.arg(z))
            out = min(out, 0.0 if u < KINK_BASE else u / np.linalg.norm(t.c))
        return out

    return distance


# upper objective shared by LuDebSinha2016a and c
_F_U = ([-1 / 0.055, 0.2 / 0.055], 0.6 / 0.055)
_F_V = ([1 / 0.3, 0.15 / 0.3], -0.4 / 0.3)
# lower objective shared by LuDebSinha2016a and b
_f_U = ([-1 / 0.055, 1.5 / 0.055], 0.0)
_f_V = ([1 / 0.5, 2 / 0.5], -3 / 0.5)

_LDS_NOTE = "power base clamped at 0 (value -1 and zero slope where the base is not positive)"


@problem(
    "IshizukaAiyoshi1992a", "IA92", nx=1, ny=2,
    params=(ParamSpec("M", 10.0, lower=1.0, lower_inclusive=False, description="large bound, M > 1"),),
    solution_ref="IA92",
)
def _(b):
    (x,) = b.x
    y1, y2 = b.y
    M = b.p["M"]
    b.upper(x * y2**2, [-x - M])
    b.lower(y1, [-x, -x - y1, y1 - x, -M - y1 - y2, y1 + y2 - M])
    note = (
        "discrepancy: the lower level forces y1 = -x, so (x*, -M, 0) "
        "is consistent only at x* = M"
    )
    for xs in (0.0, M / 2, M):
        b.solution(xs, (-M, 0), "global", family="x* in [0, M]", note=note)
    b.lower_search_box([(-M, M), (-2 * M, 2 * M)])


@problem("KleniatiAdjiman2014Ex3", "KA14", nx=1, ny=1, solution_ref="KA14, PKA17")
def _(b):
    (x,), (y,) = b.x, b.y
    b.upper(x - y, [-x - 1, x - 1])
    b.lower(0.5 * x * y**2 - x * y**3, [-y - 1, y - 1])
    b.solution(0, 1, "global")


def _ka14_ex4_rows(b):
    x1, x2, x3, x4, x5 = b.x
    y1, y2, y3, y4, y5 = b.y
    G = [
        y1 * y2 - x1,
        x2 * y1**2,
        Sum(x1 + y3, ExpOf(x2, scale=-1.0)),
        -b.x - 1,
        b.x - 1,
    ]
    f = y1**3 + y2**2 * x1 + y2**2 * x2 + 0.1 * y3 + (y4**2 + y5**2) * x3 * x4 * x5
    return G, f


@problem("KleniatiAdjiman2014Ex4", "KA14", nx=5, ny=5, solution_ref="KA14, PKA17")
def _(b):
    G, f = _ka14_ex4_rows(b)
    x1 = b.x[0]
    y3 = b.y[2]
    b.upper(-(b.x.sumsq() + b.y.sumsq()), G)
    b.lower(f, [x1 - y3**2 - 0.2, -b.y - 1, b.y - 1])
    b.solution((1, -1, -1, -1, -1), (-1,) * 5, "global")


@problem("LamparielloSagratella2017Ex23", "LS17O", nx=1, ny=2, solution_ref="LS17O")
def _(b):
    (x,) = b.x
    y1, y2 = b.y
    b.upper(x, [-x - 1, x - 1])
    b.lower((x - y1) ** 2 + (y2 + 1) ** 2, [y1**3 - y2, -y2])
    b.solution(-1, (-1, 0), "best_known")


@problem("LamparielloSagratella2017Ex31", "LS17", nx=1, ny=1, solution_ref="LS17")
def _(b):
    (x,), (y,) = b.x, b.y
    b.upper(x**2 + y**2, [-x + 1])
    b.lower(y, [-x - y + 1])
    b.solution(1, 0, "best_known")


@problem("LamparielloSagratella2017Ex32", "LS17", nx=1, ny=1, solution_ref="LS17")
def _(b):
    (x,), (y,) = b.x, b.y
    b.upper(x**2 + y**2)
    b.lower((x + y - 1) ** 2)
    b.solution(0.5, 0.5, "best_known")


@problem("LamparielloSagratella2017Ex33", "LS17", nx=1, ny=2, solution_ref="LS17")
def _(b):
    (x,) = b.x
    y1, y2 = b.y
    b.upper(x**2 + (y1 + y2) ** 2, [-x + 0.5])
    b.lower(y1, [-x - y1 - y2 + 1, -b.y])
    b.solution(0.5, (0, 0.5), "best_known")


@problem("LamparielloSagratella2017Ex35", "LS17", nx=1, ny=1, solution_ref="LS17")
def _(b):
    (x,), (y,) = b.x, b.y
    b.upper(x**2 + y**2, [-1 - x, x - 1])
    b.lower(-y, [2 * x + y - 2, -y, y - 1])
    b.solution(0.8, 0.4, "best_known")


@problem("LucchettiEtal1987", "LMP87", nx=1, ny=1, solution_ref="LMP87")
def _(b):
    (x,), (y,) = b.x, b.y
    b.upper(0.5 * (1 - x) + x * y, [-x, x - 1])
    b.lower((x - 1) * y, [-y, y - 1])
    b.solution(1, 0, "global")


def _lds_box_rows(b):
    (x,), (y,) = b.x, b.y
    return [-x, x - 1, -y, y - 2]


@problem("LuDebSinha2016a", "LDS16", nx=1, ny=1, solution_ref="LDS16")
def _(b):
    F, Fu = _lds_objective(b, *_F_U, *_F_V)
    f, fu = _lds_objective(b, *_f_U, *_f_V)
    b.upper(F, _lds_box_rows(b))
    b.lower(f)
    b.flag("nonsmooth_objective")
    b.kinks = _kinks(Fu, fu)
    b.kkt_checkable = False
    b.note(_LDS_NOTE)
    b.solution(
        1.4, 0.2, "best_known", label="cited",
        note="discrepancy: the point x* = 1.4, y* = 0.2 violates the upper-level constraints",
    )
    b.solution(
        0, 1.5, "best_known", label="suggested",
        note="discrepancy: with the clamped 0.4 power the lower level reaches f = 1 "
        "where 1.5y <= x, below f(0, 1.5) = 1.188",
    )


@problem("LuDebSinha2016b", "LDS16", nx=1, ny=1, solution_ref="LDS16")
def _(b):
    (x,), (y,) = b.x, b.y
    f, fu = _lds_objective(b, *_f_U, *_f_V)
    b.upper((x - 0.5) ** 2 + (y - 1) ** 2, _lds_box_rows(b))
    b.lower(f)
    b.flag("nonsmooth_objective")
    b.kinks = _kinks(fu)
    b.note(_LDS_NOTE)
    b.solution(
        0.5, 1, "best_known",
        note="discrepancy: with the clamped 0.4 power the lower level reaches f = 1 "
        "where 1.5y <= x, below f(0.5, 1) = 1.665",
    )


@problem("LuDebSinha2016c", "LDS16", nx=1, ny=1, solution_ref="LDS16")
def _(b):
    (x,), (y,) = b.x, b.y
    F, Fu = _lds_objective(b, *_F_U, *_F_V)
    b.upper(F, _lds_box_rows(b))
    b.lower((x - 0.5) ** 2 + (y - 1) ** 2)
    b.flag("nonsmooth_objective")
    b.kinks = _kinks(Fu)
    b.kkt_checkable = False
    b.note(_LDS_NOTE)
    b.solution(0.26, 1, "best_known")


@problem("LuDebSinha2016d", "LDS16", nx=2, ny=2, solution_ref="LDS16")
def _(b):
    x1, x2 = b.x
    y1, y2 = b.y
    ay = y1 / 14 + 16 / 7
    ax = x1 / 14 + 16 / 7
    b.upper(
        -x2,
        [
            -ay * (x1 - 2) ** 2 + x2,
            -x2 + ay * (x1 - 5),
            -(x1 + 4 - ay) * (x1 + 8 - ay) + x2,
            -4 - x1, x1 - 10, -100 - x2, x2 - 200,
            -4 - y1, y1 - 10, -100 - y2, y2 - 200,
        ],
    )
    b.lower(
        -y2,
        [
            -ax * (y1 - 2) ** 2 + y2,
            -y2 + 12.5 * ax * (y1 - 5),
            -5 * (y1 + 4 - ax) * (y1 + 8 - ax) + y2,
        ],
    )
    b.note("the first constraint block is printed with the lower-level symbol g and read as G")
    b.solution(
        (10, 192), (10, 192), "best_known",
        note="discrepancy: the third upper-level row evaluates to 27 > 0 at this point",
    )


@problem("LuDebSinha2016e", "LDS16", nx=1, ny=2)
def _(b):
    (x,) = b.x
    y1, y2 = b.y
    b.upper(
        ((y2 - 50) / 30) ** 2 + ((x - 2.5) / 0.2) ** 2,
        [2 - x, x - 3, -4 - y1, y1 - 10, -100 - y2, y2 - 200],
    )
    b.lower(
        -y2,
        [
            -x * (y1 - 2) ** 2 + y2,
            -y2 + 12.5 * x * (y1 - 5),
            -5 * (y1 + 4 - x) * (y1 + 8 - x) + y2,
        ],
    )
    b.note("no known solution")


@problem("LuDebSinha2016f", "LDS16", nx=2, ny=1)
def _(b):
    x1, x2 = b.x
    (y,) = b.y
    a = x1 / 20
    b.upper(
        -x2,
        [
            2 - y, y - 4, -80 - x1, x1 - 200, -100 - x2, x2 - 200,
            -y * (a - 2) + x2,
            -x2 + 12.5 * y * (a - 5),
            -5 * (a + 4 - y) * (a + 8 - y) + x2,
        ],
    )
    b.lower(((x1 - 50) / 28) ** 2 + ((y - 2.5) / 0.2) ** 2)
    b.note("no known solution")
