"""Problems starting with M."""

import numpy as np

from ..registry import problem
from ._pieces import ExpOf, Sum, smooth


@problem("MacalHurter1997", "MH97", nx=1, ny=1, solution_ref="MH97")
def _(b):
    (x,), (y,) = b.x, b.y
    b.upper((x - 1) ** 2 + (y - 1) ** 2)
    b.lower(0.5 * y**2 + 500 * y - 50 * x * y)
    b.solution(10.0163, 0.8197, "global")


def _mirrlees_f():
    # f = -x exp(-(y+1)^2) - exp(-(y-1)^2)
    def value(z):
        x, y = z[..., 0], z[..., 1]
        return -x * np.exp(-((y + 1) ** 2)) - np.exp(-((y - 1) ** 2))

    def grad(z):
        x, y = z
        a, c = np.exp(-((y + 1) ** 2)), np.exp(-((y - 1) ** 2))
        return np.array([-a, 2 * x * (y + 1) * a + 2 * (y - 1) * c])

    def hess(z):
        x, y = z
        a, c = np.exp(-((y + 1) ** 2)), np.exp(-((y - 1) ** 2))
        hxy = 2 * (y + 1) * a
        hyy = 2 * x * a * (1 - 2 * (y + 1) ** 2) + 2 * c * (1 - 2 * (y - 1) ** 2)
        return np.array([[0.0, hxy], [hxy, hyy]])

    return smooth(value, grad, hess)


@problem("Mirrlees1999", "M99", nx=1, ny=1, solution_ref="M99")
def _(b):
    (x,), (y,) = b.x, b.y
    b.upper((x - 2) ** 2 + (y - 1) ** 2)
    b.lower(_mirrlees_f())
    b.kkt_checkable = False
    b.solution(1, 0.95753, "best_known")


def _box1(v):
    return [-v - 1, v - 1]


def _x_plus_exp_x_times_y():
    def value(z):
        x, y = z[..., 0], z[..., 1]
        return (x + np.exp(x)) * y

    def grad(z):
        x, y = z
        e = np.exp(x)
        return np.array([(1 + e) * y, x + e])

    def hess(z):
        x, y = z
        e = np.exp(x)
        return np.array([[e * y, 1 + e], [1 + e, 0.0]])

    return smooth(value, grad, hess)


@problem("MitsosBarton2006Ex38", "MB06", nx=1, ny=1, solution_ref="MB06")
def _(b):
    (x,), (y,) = b.x, b.y
    b.upper(y**2, [_box1(x), -y - 0.1, y - 0.1])
    b.lower(_x_plus_exp_x_times_y(), _box1(y))
    b.solution(-0.567, 0, "global")


@problem("MitsosBarton2006Ex39", "MB06", nx=1, ny=1, solution_ref="MB06")
def _(b):
    (x,), (y,) = b.x, b.y
    b.upper(x, [-x + y, -x - 10, x - 10])
    b.lower(y**3, _box1(y))
    b.note("second upper-level row printed as -x + 10 (forcing x = 10) and read as the bound -x - 10")
    b.solution(-1, -1, "global")


def _mb_quartic(x, y):
    return x * (16 * y**4 + 2 * y**3 - 8 * y**2 - 1.5 * y + 0.5)


@problem("MitsosBarton2006Ex310", "MB06", nx=1, ny=1, solution_ref="MB06")
def _(b):
    (x,), (y,) = b.x, b.y
    b.upper(y, [-x + 0.1, x - 1])
    b.lower(_mb_quartic(x, y), _box1(y))
    for xs in (0.1, 0.55, 1.0):
        b.solution(xs, 0.5, "global", family="[0.1, 1] x {0.5}")


@problem("MitsosBarton2006Ex311", "MB06", nx=1, ny=1, solution_ref="MB06")
def _(b):
    (x,), (y,) = b.x, b.y
    b.upper(y, _box1(x))
    b.lower(_mb_quartic(x, y), [-y - 0.8, y - 1])
    b.solution(0, -0.8, "global")


def _mb_simple(name, F, f, solutions):
    @problem(name, "MB06", nx=1, ny=1, solution_ref="MB06")
    def _(b):
        (x,), (y,) = b.x, b.y
        b.upper(F(x, y), _box1(x))
        b.lower(f(x, y), _box1(y))
        for xs, ys in solutions:
            b.solution(xs, ys, "global")


_mb_simple("MitsosBarton2006Ex312", lambda x, y: -x + x * y + 10 * y**2,
           lambda x, y: -x * y**2 + 0.5 * y**4, [(0, 0)])
_mb_simple("MitsosBarton2006Ex313", lambda x, y: x - y,
           lambda x, y: 0.5 * x * y**2 - x**3 * y, [(0, 1)])
_mb_simple("MitsosBarton2006Ex314", lambda x, y: (x - 0.25) ** 2 + y**2,
           lambda x, y: y**3 / 3 - x * y, [(0.25, 0.5)])
_mb_simple("MitsosBarton2006Ex315", lambda x, y: x + y,
           lambda x, y: 0.5 * x * y**2 - y**3 / 3, [(-1, 1)])
_mb_simple("MitsosBarton2006Ex316", lambda x, y: 2 * x + y,
           lambda x, y: -0.5 * x * y**2 - 0.25 * y**4, [(-1, 0), (-0.5, -1)])
_mb_simple("MitsosBarton2006Ex317", lambda x, y: (x + 0.5) ** 2 + 0.5 * y**2,
           lambda x, y: 0.5 * x * y**2 + 0.25 * y**4, [(-0.25, 0.5), (-0.25, -0.5)])
_mb_simple("MitsosBarton2006Ex318", lambda x, y: -(x**2) + y**2,
           lambda x, y: x * y**2 - 0.5 * y**4, [(0.5, 0)])
_mb_simple("MitsosBarton2006Ex320", lambda x, y: (x - 0.25) ** 2 + y**2,
           lambda x, y: y**3 / 3 - x**2 * y, [(0.5, 0.5)])


@problem(
    "MitsosBarton2006Ex319", "MB06", nx=1, ny=1, solution_ref="MB06",
    aliases=("MitsosBarton06Ex319",),
)
def _(b):
    (x,), (y,) = b.x, b.y
    b.upper(x * y - y + 0.5 * y**2, _box1(x))
    b.lower(-x * y**2 + 0.5 * y**4, _box1(y))
    b.solution(0.189, 0.4343, "global")


def _mb321_f(x, y, c3):
    return (
        y**4
        + c3 * (-x + 1) * y**3
        + (-0.02 * x**2 + 0.16 * x - 0.4) * y**2
        + (0.004 * x**3 - 0.036 * x**2 + 0.08 * x) * y
    )


@problem("MitsosBarton2006Ex321", "MB06", nx=1, ny=1, solution_ref="MB06")
def _(b):
    (x,), (y,) = b.x, b.y
    b.upper((x + 0.6) ** 2 + y**2, _box1(x))
    b.lower(_mb321_f(x, y, 4 / 30), _box1(y))
    b.solution(-0.5545, 0.4554, "global")


@problem("MitsosBarton2006Ex322", "MB06", nx=1, ny=1, solution_ref="MB06")
def _(b):
    (x,), (y,) = b.x, b.y
    b.upper((x + 0.6) ** 2 + y**2, _box1(x))
    b.lower(_mb321_f(x, y, 2 / 15), [_box1(y), 0.01 * (1 + x) ** 2 - y**2])
    b.solution(-0.5545, 0.4554, "global")


@problem("MitsosBarton2006Ex323", "MB06", nx=1, ny=1, solution_ref="MB06")
def _(b):
    (x,), (y,) = b.x, b.y
    b.upper(x**2, [_box1(x), 1 + x - 9 * x**2 - y])
    b.lower(y, [_box1(y), y**2 * (x - 0.5)])
    b.solution(
        -0.4191, -1, "global",
        note="discrepancy: x = -0.4191 rounds the root (1 - sqrt(73))/18 = -0.41913; "
        "the third upper row is violated by 9.7e-5",
    )


@problem("MitsosBarton2006Ex324", "MB06", nx=1, ny=1, solution_ref="MB06")
def _(b):
    (x,), (y,) = b.x, b.y
    b.upper(x**2 - y, [-x, x - 1])
    b.lower(((y - 1 - 0.1 * x) ** 2 - 0.5 - 0.5 * x) ** 2, [-y, y - 3])
    b.solution(0.2106, 1.799, "global")


@problem("MitsosBarton2006Ex325", "MB06", nx=2, ny=3, solution_ref="MB06")
def _(b):
    x1, x2 = b.x
    y1, y2, y3 = b.y
    b.upper(
        x1 * y1 + x2 * y1**2 - x1 * x2 * y3,
        [-b.x - 1, b.x - 1, 0.1 * y1 * y2 - x1**2, x2 * y1**2],
    )
    b.lower(
        x1 * y1**2 + x2 * y2 * y3,
        [-b.y - 1, b.y - 1, y1**2 - y2 * y3, y2**2 * y3 - y1 * x1, -(y3**2) + 0.1],
    )
    b.solution((-1, -1), (-1, 1, 1), "best_known", F=-1)
    b.claim(-1)


@problem("MitsosBarton2006Ex326", "MB06", nx=2, ny=3, solution_ref="MB06")
def _(b):
    x1, x2 = b.x
    y1, y2, y3 = b.y
    r2 = b.y.sumsq()
    b.upper(
        x1 * y1 + x2 * y2**2 + x1 * x2 * y3**3,
        [0.1 - x1**2, 1.5 - r2, r2 - 2.5, -b.x - 1, b.x - 1],
    )
    b.lower(x1 * y1**2 + x2 * y2**2 + (x1 - x2) * y3**2, [-b.y - 1, b.y - 1])
    b.note("third upper-level row printed as 2.5 + |y|^2 (never satisfiable) and read as |y|^2 - 2.5")
    b.solution((-1, -1), (1, 1, -0.707), "global")


def _mb327_rows(b):
    x1, x2, x3, x4, x5 = b.x
    y1, y2, y3, y4, y5 = b.y
    G = [-b.x - 1, b.x - 1, y1 * y2 - x1, x2 * y1**2, Sum(x1 + y3, ExpOf(x2, scale=-1.0))]
    f = y1**3 + y2**2 * x1 + y2**2 * x2 + 0.1 * y3 + (y4**2 + y5**2) * x3 * x4 * x5
    g = [
        -b.y - 1,
        b.y - 1,
        y1 * y2 - 0.3,
        x1 - y3**2 - 0.2,
        Sum(y4 * y5 - 0.1, ExpOf(y3, scale=-1.0)),
    ]
    return G, f, g


@problem("MitsosBarton2006Ex327", "MB06", nx=5, ny=5, solution_ref="MB06")
def _(b):
    G, f, g = _mb327_rows(b)
    b.upper(b.x.sumsq() + b.y.sumsq(), G)
    b.lower(f, g)
    b.solution((0,) * 5, (-1, 0, -1, 0, 0), "best_known", F=2)
    b.claim(2)


@problem("MitsosBarton2006Ex328", "MB06", nx=5, ny=5, solution_ref="MB06")
def _(b):
    G, f, g = _mb327_rows(b)
    b.upper(-(b.x.sumsq() + b.y.sumsq()), G)
    b.lower(f, g)
    b.solution((1, -1, -1, -1, -1), (-1, 1, -1, -1, 1), "best_known", F=-10, f=-3.1)
    b.solution(
        (-1,) * 5, (1, -1, -1, -1, 1), "best_known", F=-10, f=-3.1, label="alternative",
        note="discrepancy: at x = (-1, ..., -1) the lower level attains f = -5.1 < -3.1",
    )
    b.claim(-10, -3.1)


@problem("MorganPatrone2006a", "MP06", nx=1, ny=1, solution_ref="MP06")
def _(b):
    (x,), (y,) = b.x, b.y
    b.upper(-(x + y), [-0.5 - x, x - 0.5])
    b.lower(x * y, [-1 - y, y - 1])
    b.solution(0, 1, "best_known")


def _three_branch(k, left, right):
    """(x + left) y for x < -k, 0 on [-k, k), (x + right) y for x >= k.

    Each boundary point belongs to the branch whose interval starts there.
    """

    def branch(x):
        return np.where(x < -k, -1, np.where(x < k, 0, 1))

    def shift(x):
        br = branch(x)
        return np.where(br < 0, left, right), br != 0

    def value(z):
        x, y = z[..., 0], z[..., 1]
        s, active = shift(x)
        return np.where(active, (x + s) * y, 0.0)

    def grad(z):
        x, y = z
        s, active = shift(x)
        return np.array([y, x + s]) if active else np.zeros(2)

    def hess(z):
        _, active = shift(z[0])
        return np.array([[0.0, 1.0], [1.0, 0.0]]) if active else np.zeros((2, 2))

    def distance(z):
        return float(min(abs(z[0] + k), abs(z[0] - k)))

    return smooth(value, grad, hess), distance


@problem("MorganPatrone2006b", "MP06", nx=1, ny=1, solution_ref="MP06")
def _(b):
    (x,), (y,) = b.x, b.y
    f, kinks = _three_branch(0.25, 0.25, -0.25)
    b.upper(-(x + y))
    b.lower(f, [-0.5 - x, x - 0.5, -1 - y, y - 1])
    b.flag("piecewise")
    b.kinks = kinks
    b.kkt_checkable = False
    b.note("on a branch boundary the branch whose interval starts there applies")
    b.solution(0.25, 1, "best_known")


@problem("MorganPatrone2006c", "MP06", nx=1, ny=1, solution_ref="MP06")
def _(b):
    (x,), (y,) = b.x, b.y
    # printed as (x + -7/4) y on the left and (x - -7/4) y on the right
    f, kinks = _three_branch(1.75, -1.75, 1.75)
    b.upper(-(x + y))
    b.lower(f, [-2 - x, x - 2, -1 - y, y - 1])
    b.flag("piecewise")
    b.kinks = kinks
    b.kkt_checkable = False
    b.note("outer branches follow the printed signs: (x - 7/4) y on the left, (x + 7/4) y on the right")
    b.solution(2, -1, "best_known")


@problem("MuuQuy2003Ex1", "MQ03", nx=1, ny=2, solution_ref="MQ03")
def _(b):
    (x,) = b.x
    y1, y2 = b.y
    b.upper(y1**2 + y2**2 + x**2 - 4 * x, [-x, x - 2])
    b.lower(
        y1**2 + 0.5 * y2**2 + y1 * y2 + (1 - 3 * x) * y1 + (1 + x) * y2,
        [2 * y1 + y2 - 2 * x - 1, -b.y],
    )
    b.solution(0.8438, (0.7657, 0), "best_known")


@problem("MuuQuy2003Ex2", "MQ03", nx=2, ny=3, solution_ref="MQ03")
def _(b):
    x1, x2 = b.x
    y1, y2, y3 = b.y
    b.upper(
        y1**2 + y3**2 - y1 * y3 - 4 * y2 - 7 * x1 + 4 * x2,
        [-b.x, x1 + x2 - 1],
    )
    b.lower(
        y1**2 + 0.5 * y2**2 + 0.5 * y3**2 + y1 * y2 + (1 - 3 * x1) * y1 + (1 + x2) * y2,
        [2 * y1 + y2 - y3 + x1 - 2 * x2 + 2, -b.y],
    )
    b.solution(
        (0.609, 0.391), (0, 0, 1.828), "best_known",
        note="discrepancy: the active row gives y3 = x1 - 2 x2 + 2 = 1.827, "
        "so the printed 1.828 leaves a lower-level gap of 1.8e-3",
    )
