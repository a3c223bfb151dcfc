"""Problems A through C."""

from ..registry import ParamSpec, problem
from ._pieces import ExpOf, Quotient, Sum


@problem("AiyoshiShimizu1984Ex2", "AS84", nx=2, ny=2, solution_ref="AS84, IA92")
def _(b):
    x1, x2 = b.x
    y1, y2 = b.y
    b.upper(2 * x1 + 2 * x2 - 3 * y1 - 3 * y2 - 60, [x1 + x2 + y1 - 2 * y2 - 40, b.x - 50, -b.x])
    b.lower((y1 - x1 + 20) ** 2 + (y2 - x2 + 20) ** 2, [2 * b.y - b.x + 10, -b.y - 10, b.y - 20])
    b.solution((25, 30), (5, 10), "global")
    b.solution((0, 0), (-10, -10), "local")


@problem("AllendeStill2013", "AS13", nx=2, ny=2, solution_ref="AS13")
def _(b):
    x1, x2 = b.x
    y1, y2 = b.y
    b.upper(
        -x1**2 - 2 * x1 + x2**2 - 2 * x2 + y1**2 + y2**2,
        [-b.x, -b.y, x1 - 2],
    )
    b.lower(
        y1**2 - 2 * x1 * y1 + y2**2 - 2 * x2 * y2,
        [(y1 - 1) ** 2 - 0.25, (y2 - 1) ** 2 - 0.25],
    )
    b.solution((0.5, 0.5), (0.5, 0.5), "best_known")


def _quad(M, u, v):
    return sum(M[i][j] * u[i] * v[j] for i in range(len(u)) for j in range(len(v)))


def _affine(M, u, N, v, c):
    return [
        sum(M[i][j] * u[j] for j in range(len(u))) + sum(N[i][j] * v[j] for j in range(len(v))) + c[i]
        for i in range(len(c))
    ]


@problem("AnEtal2009", "ATCT09", nx=2, ny=2, solution_ref="ATCT09")
def _(b):
    z = [*b.x, *b.y]
    H = [[-3.8, 4.4, 1.2, -2.2], [4.4, -2.2, 0.6, 1.8], [1.2, 0.6, 0.0, 0.4], [-2.2, 1.8, 0.4, 0.0]]
    c1 = [935.74474, 87.53654]
    c2 = [121.96196, 299.24825]
    A = [[0.0, 3.88889], [-2.0, 8.77778]]
    B = [[4.88889, 7.44444], [-5.11111, 0.88889]]
    d = [-61.57778, -0.8]
    P = [[-17.85, 6.575], [30.325, 30.325]]
    Q = [[21.10204, 11.81633], [-5.11111, -14.44898]]
    q = [-18.21053, 13.05263]
    D = [[5.0, 7.44444], [-8.33333, 3.0], [-8.66667, -8.55556], [6.44444, -5.11111]]
    E = [[3.88889, 1.77778], [6.88889, 6.11111], [-5.33333, -7.0], [1.44444, 4.44444]]
    bb = [-39.62222, -60.0, 72.37778, -17.28889]
    F = 0.5 * _quad(H, z, z) + b.x.dot(c1) + b.y.dot(c2)
    b.upper(F, [-b.x, -b.y, _affine(A, b.x, B, b.y, d)])
    f = _quad(P, b.y, b.x) + 0.5 * _quad(Q, b.y, b.y) + b.y.dot(q)
    b.lower(f, _affine(D, b.x, E, b.y, bb))
    b.solution((0.200001, 1.999997), (3.999998, 4.600005), "approximate")


@problem("Bard1988Ex1", "Bard88", nx=1, ny=1, solution_ref="Bard88")
def _(b):
    (x,), (y,) = b.x, b.y
    b.upper((x - 5) ** 2 + (2 * y + 1) ** 2, [-x])
    b.lower(
        (y - 1) ** 2 - 1.5 * x * y,
        [-3 * x + y + 3, x - 0.5 * y - 4, x + y - 7, -y],
    )
    b.solution(1, 0, "global")
    b.solution(5, 2, "local")


@problem("Bard1988Ex2", "Bard88", nx=4, ny=4, solution_ref="C02")
def _(b):
    x1, x2, x3, x4 = b.x
    y1, y2, y3, y4 = b.y
    b.upper(
        (200 - y1 - y3) * (y1 + y3) + (160 - y2 - y4) * (y2 + y4),
        [x1 + x2 + x3 + x4 - 40, x1 - 10, x2 - 5, x3 - 15, x4 - 20, -b.x],
    )
    b.lower(
        (y1 - 4) ** 2 + (y2 - 13) ** 2 + (y3 - 35) ** 2 + (y4 - 2) ** 2,
        [
            0.4 * y1 + 0.7 * y2 - x1,
            0.6 * y1 + 0.3 * y2 - x2,
            0.4 * y3 + 0.7 * y4 - x3,
            0.6 * y3 + 0.3 * y4 - x4,
            y1 - 20, y2 - 20, y3 - 40, y4 - 40,
            -b.y,
        ],
    )
    b.values_only(-6600, 57.48, label="literature")
    b.values_only(-6600, 54, label="corrected", note="authoritative value pair")
    b.claim(-6600, 54)
    b.note("claim_conflict: literature pair (-6600, 57.48) versus corrected pair (-6600, 54)")


@problem("Bard1988Ex3", "Bard88", nx=2, ny=2, solution_ref="Bard88")
def _(b):
    x1, x2 = b.x
    y1, y2 = b.y
    b.upper(-x1**2 - 3 * x2 - 4 * y1 + y2**2, [x1**2 + 2 * x2 - 4, -b.x])
    b.lower(
        2 * x1**2 + y1**2 - 5 * y2,
        [
            -(x1**2) + 2 * x1 - x2**2 + 2 * y1 - y2 - 3,
            -x2 - 3 * y1 + 4 * y2 + 4,
            -b.y,
        ],
    )
    b.values_only(-12.68, -1.02)
    b.claim(-12.68, -1.02)


@problem("Bard1991Ex1", "Bard91", nx=1, ny=2, solution_ref="Bard91")
def _(b):
    (x,) = b.x
    y1, y2 = b.y
    b.upper(x + y2, [-x + 2, x - 4])
    b.lower(2 * y1 + x * y2, [x - y1 - y2 + 4, -b.y])
    b.solution(2, (6, 0), "global")


@problem("BardBook1998", "BardBook98", nx=2, ny=2)
def _(b):
    x1, x2 = b.x
    y1, y2 = b.y
    b.upper((y1 - x1 + 20) ** 2 + (y2 - x2 + 20) ** 2, [b.x - 50, -b.x])
    b.lower(
        2 * x1 + 2 * x2 - 3 * y1 - 3 * y2 - 60,
        [x1 + x2 + y1 - 2 * y2 - 40, 2 * b.y - b.x + 10, b.y - 20, -b.y - 10],
    )
    b.note("no known solution")


def _cv94a_solutions(b, rho):
    if rho == 1:
        b.solution(1, 0, "global")
    elif rho < 2:
        b.solution(0.5 * (1 + rho), 0.5 * (-1 + rho), "global")
        b.solution(0.5, 0.5, "local")
    elif rho == 2:
        b.solution(0.5, 0.5, "global")
        b.solution(1.5, 0.5, "global")
    else:
        b.solution(0.5, 0.5, "global")


@problem(
    "CalamaiVicente1994a", "CV94", nx=1, ny=1,
    params=(ParamSpec("rho", 1.0, lower=1.0, description="lower-level constraint offset"),),
    solution_ref="CV94",
)
def _(b):
    (x,), (y,) = b.x, b.y
    rho = b.p["rho"]
    b.upper(0.5 * (x - 1) ** 2 + 0.5 * y**2)
    b.lower(0.5 * y**2 - x * y, [x - y - 1, -x - y + 1, x + y - rho])
    _cv94a_solutions(b, rho)


@problem("CalamaiVicente1994b", "CV94", nx=2, ny=2)
def _(b):
    x1, x2 = b.x
    y1, y2 = b.y
    b.upper(0.5 * ((x1 - 1) ** 2 + (x2 - 1) ** 2) + y1**2 + y2**2)
    b.lower(
        0.5 * y1**2 - x1 * y1 + 0.5 * y2**2 - x2 * y2,
        [b.x - b.y - 1, -b.x - b.y + 1, x1 + y1 - 1.5, x1 + y2 - 3],
    )
    b.note("upper objective sums over the two x components (printed upper index 4 conflicts with x - y)")
    b.note("no known solution")


@problem("CalamaiVicente1994c", "CV94", nx=4, ny=2, solution_ref="CV94")
def _(b):
    A = [[197.2, 32.4, -129.6, -43.2], [32.4, 110.8, -43.2, -14.4],
         [-129.6, -43.2, 302.8, -32.4], [-43.2, -14.4, -32.4, 289.2]]
    B = [[100, 0], [0, 100]]
    a = [-8.56, -9.52, -9.92, -16.64]
    C = [[-132.4, -10.8], [-10.8, -103.6], [43.2, 14.4], [14.4, 4.8]]
    D = [[13.24, 1.08, -4.32, -1.44], [1.08, 10.36, -1.44, -0.48],
         [13.24, 1.08, -4.32, -1.44], [1.08, 10.36, -1.44, -0.48],
         [-13.24, -1.08, 4.32, 1.44], [-1.08, -10.36, 1.44, 0.48]]
    E = [[-10, 0], [0, -10], [10, 0], [0, 10], [-10, 0], [0, -10]]
    d = [-1, -1, -1.5, -3, 1, 1]
    b.upper(0.5 * _quad(A, b.x, b.x) + 0.5 * _quad(B, b.y, b.y) + b.x.dot(a) + 2)
    b.lower(0.5 * _quad(B, b.y, b.y) + _quad(C, b.x, b.y), _affine(D, b.x, E, b.y, d))
    b.note("entry (3, 4) of D is printed as -1.44x_4 and read as the constant -1.44")
    b.values_only(0.3125, label="unique global optimum value")
    b.claim(0.3125)


@problem("CalveteGale1999P1", "CG99", nx=2, ny=3, solution_ref="CG99")
def _(b):
    x1, x2 = b.x
    y1, y2, y3 = b.y
    b.upper(-8 * x1 - 4 * x2 + y1 - 40 * y2 - 4 * y3, [-b.x])
    b.lower(
        Quotient(1 + x1 + x2 + 2 * y1 - y2 + y3, 6 + 2 * x1 + y1 + y2 - 3 * y3),
        [
            -b.y,
            -y1 + y2 + y3 - 1,
            2 * x1 - y1 + 2 * y2 - 0.5 * y3 - 1,
            2 * x2 + 2 * y1 - y2 - 0.5 * y3 - 1,
        ],
    )
    # keep the denominator at least 1.5
    b.box(0, 0, 2)
    b.box(1, 0, 2)
    b.box(2, 0, 1.5)
    b.box(3, 0, 1.5)
    b.box(4, 0, 1.5)
    b.flag("domain_restricted")
    b.solution((0, 0.9), (0, 0.6, 0.4), "best_known", F=-29.2)
    b.claim(-29.2)


@problem("ClarkWesterberg1990a", "CW90", nx=1, ny=1, solution_ref="CW90")
def _(b):
    (x,), (y,) = b.x, b.y
    b.upper((x - 3) ** 2 + (y - 2) ** 2, [x - 8, -x])
    b.lower((y - 5) ** 2, [-2 * x + y - 1, x - 2 * y - 2, x + 2 * y - 14])
    b.solution(1, 3, "best_known")


@problem("Colson2002BIPA1", "Colson02", nx=1, ny=1, solution_ref="Colson02")
def _(b):
    (x,), (y,) = b.x, b.y
    b.upper((10 - x) ** 3 + (10 - y) ** 3, [x - 5, -x + y, -x])
    b.lower((x + 2 * y - 15) ** 4, [x + y - 20, y - 20, -y])
    b.solution(5, 5, "best_known")


@problem("Colson2002BIPA2", "Colson02", nx=1, ny=1, solution_ref="Colson02")
def _(b):
    (x,), (y,) = b.x, b.y
    b.upper((x - 5) ** 2 + (2 * y + 1) ** 2, [-x])
    b.lower(
        (y - 1) ** 2 - 1.5 * x * y + x**3,
        [-3 * x + y + 3, x - 0.5 * y - 4, x + y - 7, -y],
    )
    b.solution(1, 0, "best_known")


@problem("Colson2002BIPA3", "Colson02", nx=1, ny=1, solution_ref="Colson02")
def _(b):
    (x,), (y,) = b.x, b.y
    b.upper((x - 5) ** 4 + (2 * y + 1) ** 4, [x + y - 4, -x])
    b.lower(
        Sum(ExpOf(-x + y), x**2 + 2 * x * y + y**2 + 2 * x + 6 * y),
        [-x + y - 2, -y],
    )
    b.solution(4, 0, "best_known")


@problem("Colson2002BIPA4", "Colson02", nx=1, ny=1, solution_ref="Colson02")
def _(b):
    (x,), (y,) = b.x, b.y
    b.upper(x**2 + (y - 10) ** 2, [x + 2 * y - 6, -x])
    b.lower(x**3 + 2 * y**3 + x - 2 * y - x**2, [-x + 2 * y - 3, -y])
    b.solution(
        0, 0.6039, "best_known",
        note="discrepancy: the lower level is minimized at y = 1/sqrt(3) = 0.57735, not 0.6039",
    )


@problem("Colson2002BIPA5", "Colson02", nx=1, ny=2, solution_ref="Colson02")
def _(b):
    (x,) = b.x
    y1, y2 = b.y
    b.upper((x - y2) ** 4 + (y1 - 1) ** 2 + (y1 - y2) ** 2, [-x])
    b.lower(
        Sum(2 * x + y1**2 + 4 * y1 + 2 * y2**2 - 6 * y2, ExpOf(y1)),
        [
            Sum(6 * x + y1**2 - 15, ExpOf(y2)),
            5 * x + y1**4 - y2 - 25,
            y1 - 4,
            y2 - 2,
            -b.y,
        ],
    )
    b.solution(
        1.94, (0, 1.21), "best_known",
        note="discrepancy: y2 = 1.21 rounds the active bound ln(15 - 6x) = 1.2119; "
        "the rounding leaves a lower-level gap of 2.2e-3",
    )
