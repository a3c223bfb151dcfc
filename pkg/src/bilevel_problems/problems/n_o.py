"""Problems N and O, including the Outrata variant families."""

from ..registry import problem


@problem("NieEtal2017Ex34", "NWY17", nx=1, ny=2, solution_ref="NWY17")
def _(b):
    (x,) = b.x
    y1, y2 = b.y
    b.upper(x + y1 + y2, [-x + 2, -3 + x])
    b.lower(x * (y1 + y2), [-(y1**2) + y2**2 + (y1**2 + y2**2) ** 2, -y1])
    b.solution(2, (0, 0), "global")


@problem("NieEtal2017Ex52", "NWY17", nx=2, ny=3, solution_ref="NWY17")
def _(b):
    x1, x2 = b.x
    y1, y2, y3 = b.y
    r2 = b.y.sumsq()
    b.upper(
        x1 * y1 + x2 * y2 + x1 * x2 * y1 * y2 * y3,
        [-1 - b.x, b.x - 1, y1 * y2 - x1**2],
    )
    b.lower(x1 * y1**2 + x2**2 * y2 * y3 - y1 * y3**2, [1 - r2, r2 - 2])
    b.solution((-1, -1), (1.1097, 0.3143, -0.8184), "best_known")


@problem("NieEtal2017Ex54", "NWY17", nx=4, ny=4, solution_ref="NWY17")
def _(b):
    x1, x2, x3, x4 = b.x
    y1, y2, y3, y4 = b.y
    b.upper(
        x1**2 * y1 + x2 * y2 + x3 * y3**2 + x4 * y4**2,
        [b.x.sumsq() - 1, y1 * y2 - x1, y3 * y4 - x3**2],
    )
    b.lower(
        y1**2 - y2 * (x1 + x2) - (y3 + y4) * (x3 + x4),
        [b.y.sumsq() - 1, y2**2 + y3**2 + y4**2 - y1],
    )
    b.solution(
        (0, -0.0, -0.7071, -0.7071), (0.6180, 0, -0.5559, -0.5559), "best_known",
        note="discrepancy: the four-decimal point violates the second lower row by 5.0e-5",
    )


@problem("NieEtal2017Ex57", "NWY17", nx=2, ny=3, solution_ref="NWY17")
def _(b):
    x1, x2 = b.x
    y1, y2, y3 = b.y
    b.upper(
        0.5 * x1**2 * y1 + x2 * y2**2 - (x1 + x2**2) * y3,
        [-1 - b.x, b.x - 1, -x1 - x2 + x1**2 + y1**2 + y2**2],
    )
    b.lower(
        x2 * (y1 * y2 * y3 + y2**2 - y3**3),
        [-x1 + b.y.sumsq(), -1 + 2 * y2 * y3],
    )
    b.solution((1, 1), (0, 0, 1), "best_known")


@problem("NieEtal2017Ex58", "NWY17", nx=4, ny=4, solution_ref="NWY17")
def _(b):
    x1, x2, x3, x4 = b.x
    y1, y2, y3, y4 = b.y
    b.upper(
        (x1 + x2 + x3 + x4) * (y1 + y2 + y3 + y4),
        [b.x.sumsq() - 1, y3**2 - x4, y2 * y4 - x1],
    )
    b.lower(
        x1 * y1 + x2 * y2 + 0.1 * y3 + 0.5 * y4 - y3 * y4,
        [
            y1**2 + 2 * y2**2 + 3 * y3**2 + 4 * y4**2 - x1**2 - x3**2 - x2 - x4,
            -y2 * y3 + y1 * y4,
        ],
    )
    b.solution(
        (0.5135, 0.5050, 0.4882, 0.4929), (-0.8346, -0.4104, -0.2106, -0.2887), "best_known",
        note="discrepancy: the second lower row -y2 y3 + y1 y4 evaluates to 0.1545 > 0 "
        "at this point",
    )


@problem("NieEtal2017Ex61", "NWY17", nx=2, ny=2, solution_ref="NWY17")
def _(b):
    x1, x2 = b.x
    y1, y2 = b.y
    b.upper(
        y1**3 * (x1**2 - 3 * x1 * x2) - y1**2 * y2 + y2 * x2**3,
        [-b.x - 1, b.x - 1, -y2 - y1 * (1 - x1**2)],
    )
    b.lower(y1 * y2**2 - y2**3 - y1**2 * (x2 - x1**2), [y1**2 + y2**2 - 1])
    b.solution(
        (0.5708, -1), (-0.1639, 0.9865), "best_known",
        note="discrepancy: the four-decimal point violates the lower row by 4.5e-5",
    )


# -- Outrata 1990, example 1 family -------------------------------------------

_H1 = [[1, -2], [-2, 5]]
_H2 = [[1, 3], [3, 10]]
_I2 = [[1, 0], [0, 1]]

_EX1 = {
    "a": (0.1, _H1, _I2, (0.97, 3.14), (2.6, 1.8)),
    "b": (1.0, _H1, _I2, (0.28, 0.48), (2.34, 1.03)),
    "c": (0.0, _H2, _I2, (20.26, 42.81), (3, 3)),
    "d": (0.1, _H2, _I2, (2, 0.06), (2, 0)),
    "e": (0.1, _H2, [[-1, 2], [3, -3]], (2.42, -3.65), (0, 1.58)),
}


_ONE_THIRD = (
    "discrepancy: y is feasible only if 0.333 is read as 1/3; "
    "as printed both coefficient-0.333 rows are violated by 1e-3"
)
_EX1_NOTES = {
    "a": "discrepancy: the two-decimal point violates the second lower row by 6e-4",
    "c": _ONE_THIRD,
    "e": "discrepancy: with b(x) = Bx as printed the lower level is minimized at "
    "y = (0, 1.821); the stated y = (0, 1.58) matches b(x) = B^T x",
}


def _outrata90_ex1(suffix, r, H, Bm, xs, ys):
    @problem(f"Outrata1990Ex1{suffix}", "O90", nx=2, ny=2, solution_ref="O90")
    def _(b):
        x1, x2 = b.x
        y1, y2 = b.y
        bx = [Bm[i][0] * x1 + Bm[i][1] * x2 for i in range(2)]
        quad = sum(H[i][j] * b.y[i] * b.y[j] for i in range(2) for j in range(2))
        b.upper(0.5 * (y1**2 + y2**2) - 3 * y1 - 4 * y2 + r * (x1**2 + x2**2))
        b.lower(
            0.5 * quad - b.y.dot(bx),
            [-0.333 * y1 + y2 - 2, y1 - 0.333 * y2 - 2, -b.y],
        )
        if suffix in ("b", "c"):
            b.note("the reported point depends on the starting point of the original algorithm")
        b.solution(xs, ys, "best_known", note=_EX1_NOTES.get(suffix, ""))


for _s, _args in _EX1.items():
    _outrata90_ex1(_s, *_args)


# -- Outrata 1990, example 2 family -------------------------------------------


def _g_standard(b):
    y1, y2 = b.y
    return [-0.333 * y1 + y2 - 2, y1 - 0.333 * y2 - 2, -b.y]


def _g_alternative(b):
    (x,) = b.x
    y1, y2 = b.y
    return [(-0.333 + 0.1 * x) * y1 + y2 - x, y1 + (-0.333 - 0.1 * x) * y2 - 2, -b.y]


_EX2 = {
    "a": (lambda x: (1, 1), _g_standard, 2.07, (3, 3)),
    "b": (lambda x: (1 + x, 0), _g_standard, 0, (3, 3)),
    "c": (lambda x: (1 + x, 1 + 0.1 * x), _g_standard, 3.456, (1.707, 2.569)),
    "d": (lambda x: (1, 1), _g_alternative, 2.498, (3.632, 2.8)),
    "e": (lambda x: (1 + x, 1), _g_alternative, 3.999, (1.665, 3.887)),
}


_EX2_NOTES = {
    "a": _ONE_THIRD,
    "b": _ONE_THIRD,
    "c": "discrepancy: the three-decimal point violates the first lower row by 5.7e-4",
    "d": "discrepancy: the three-decimal point violates the second lower row by 1.6e-4",
}


def _outrata90_ex2(suffix, diag, rows, xs, ys):
    @problem(f"Outrata1990Ex2{suffix}", "O90", nx=1, ny=2, solution_ref="O90")
    def _(b):
        (x,) = b.x
        y1, y2 = b.y
        h1, h2 = diag(x)
        b.upper(0.5 * ((y1 - 3) ** 2 + (y2 - 4) ** 2), [-x])
        b.lower(
            0.5 * (h1 * y1**2 + h2 * y2**2) - (3 + 1.333 * x) * y1 - x * y2,
            rows(b),
        )
        b.solution(xs, ys, "best_known", note=_EX2_NOTES.get(suffix, ""))


for _s, _args in _EX2.items():
    _outrata90_ex2(_s, *_args)


# -- Outrata 1993 / 1994 --------------------------------------------------------


def _outrata_f(b, c):
    (x,) = b.x
    y1, y2 = b.y
    return 0.5 * (1 + 0.2 * x) * y1**2 + 0.5 * (1 + 0.1 * x) * y2**2 - (3 + c * x) * y1 - x * y2


def _outrata_F(b):
    y1, y2 = b.y
    return 0.5 * (y1 - 3) ** 2 + 0.5 * (y2 - 4) ** 2


def _g_disk(b):
    (x,) = b.x
    y1, y2 = b.y
    return [-0.333 * y1 + y2 + 0.1 * x - 1, y1**2 + y2**2 - 0.1 * x - 9, -b.y]


@problem("Outrata1993Ex31", "O93", nx=1, ny=2, solution_ref="O93")
def _(b):
    (x,) = b.x
    y1, y2 = b.y
    b.upper(_outrata_F(b), [-x])
    b.lower(
        _outrata_f(b, 1.33),
        [
            (-0.333 + 0.1 * x) * y1 + y2 + 0.1 * x - 2,
            y1 + (-0.333 - 0.1 * x) * y2 + 0.1 * x - 2,
            -b.y,
        ],
    )
    b.solution(1.90910, (2.97836, 2.23182), "best_known")


@problem("Outrata1993Ex32", "O93", nx=1, ny=2, solution_ref="O93")
def _(b):
    (x,) = b.x
    b.upper(_outrata_F(b), [-x])
    b.lower(_outrata_f(b, 1.33), _g_disk(b))
    b.solution(4.06095, (2.68227, 1.48710), "best_known")


@problem("Outrata1994Ex31", "O94", nx=1, ny=2, solution_ref="O94")
def _(b):
    (x,) = b.x
    b.upper(_outrata_F(b), [-x, x - 10])
    b.lower(_outrata_f(b, 1.333), _g_disk(b))
    b.solution(4.0604, (2.6822, 1.4871), "best_known")


@problem("OutrataCervinka2009", "OC09", nx=2, ny=2, solution_ref="OC09")
def _(b):
    x1, x2 = b.x
    y1, y2 = b.y
    b.upper(-2 * x1 - 0.5 * x2 - y2, [x1])
    b.lower(y1 - y2 + b.x.dot(b.y) + 0.5 * b.y.sumsq(), [y2, y2 - y1, y2 + y1])
    b.solution((0, 0), (0, 0), "global")
