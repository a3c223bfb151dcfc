"""Problems D through H."""

from ..registry import ParamSpec, problem
from ._pieces import Quotient, power_of_affine


@problem("Dempe1992a", "Dempe92", nx=2, ny=2)
def _(b):
    x1, x2 = b.x
    y1, y2 = b.y
    b.upper(y2, [x1**2 + (x2 + 1) ** 2 - 1])
    b.lower(0.5 * (y1 - 1) ** 2 + 0.5 * y2**2, [y1 + y2 * x1 + x2, y1])
    b.solution(
        (0, 0), (0, -0.5), "best_known",
        note="discrepancy: at x = (0, 0) the lower level is minimized at y = (0, 0) "
        "with f = 0.5 < 0.625",
    )


@problem("Dempe1992b", "Dempe92", nx=1, ny=1, solution_ref="CMS05")
def _(b):
    (x,), (y,) = b.x, b.y
    b.upper((x - 3.5) ** 2 + (y + 4) ** 2)
    b.lower((y - 3) ** 2, [y**2 - x])
    b.values_only(31.25, 4.0)
    b.claim(31.25, 4.0)


@problem("DempeDutta2012Ex24", "DD12", nx=1, ny=1, solution_ref="DD12")
def _(b):
    (x,), (y,) = b.x, b.y
    b.upper((x - 1) ** 2 + y**2)
    b.lower(x**2 * y, [y**2])
    b.solution(1, 0, "global")


@problem("DempeDutta2012Ex31", "DD12", nx=2, ny=2, solution_ref="DD12, NWY17")
def _(b):
    x1, x2 = b.x
    y1, y2 = b.y
    b.upper(-y2, [-b.x])
    b.equalities(H=[y1 * y2])
    b.lower(
        y1**2 + (y2 + 1) ** 2,
        [
            (y1 - x1) ** 2 + (y2 - x1 - 1) ** 2 - 1,
            (y1 + x2) ** 2 + (y2 - x2 - 1) ** 2 - 1,
        ],
    )
    b.solution(
        (0.71, 0.71), (0, 1), "best_known", value_tol=5e-3,
        note="discrepancy: 0.71 is a two-digit rounding (1/sqrt(2) makes both lower constraints active)",
    )


@problem("DempeEtal2012", "DMZ12", nx=1, ny=1, solution_ref="DMZ12")
def _(b):
    (x,), (y,) = b.x, b.y
    b.upper(x, [-1 - x, x - 1])
    b.lower(x * y, [-y, y - 1])
    b.solution(-1, 1, "best_known")


@problem("DempeFranke2011Ex41", "DF11", nx=2, ny=2, solution_ref="DF11")
def _(b):
    x1, x2 = b.x
    y1, y2 = b.y
    b.upper(x1 + y1**2 + y2**2, [-1 - x1, -1 + x1])
    b.equalities(H=[-1 - x2])
    b.lower(b.x.dot(b.y), [-2 * y1 + y2, y1 - 2, -y2, y2 - 2])
    b.solution((0, -1), (1, 2), "best_known")


@problem("DempeFranke2011Ex42", "DF11", nx=2, ny=2, solution_ref="DF11")
def _(b):
    x1, x2 = b.x
    y1, y2 = b.y
    b.upper(x1 + (y1 - 1) ** 2 + y2**2, [-1 - x1, -1 + x1])
    b.equalities(H=[-1 - x2])
    b.lower(b.x.dot(b.y), [-y1 + y2 - 1, y1 + y2 - 3.5, y2 - 2])
    b.solution((1, -1), (0, 1), "best_known")


@problem("DempeFranke2014Ex38", "DF14", nx=2, ny=2, solution_ref="DF14")
def _(b):
    x1, x2 = b.x
    y1, y2 = b.y
    b.upper(2 * x1 + x2 + 2 * y1 - y2, [-1 - x1, -1 + x1, -1 - x2, x2 + 0.75])
    b.lower(b.x.dot(b.y), [-2 * y1 + y2, y1 - 2, -y2, y2 - 2])
    b.solution((-1, -1), (2, 2), "best_known")


@problem("DempeLohse2011Ex31a", "DL11", nx=2, ny=2, solution_ref="DL11")
def _(b):
    x1, x2 = b.x
    y1, y2 = b.y
    b.upper((x1 - 0.5) ** 2 + (x2 - 0.5) ** 2 - 3 * y1 - 3 * y2)
    b.lower(x1 * y1 + x2 * y2, [y1 + y2 - 2, -y1 + y2, -b.y])
    b.solution(
        (0.5, 0.5), (1, 1), "global",
        note="discrepancy: y = (0, 0) is lower-level feasible with f = 0 < 1, "
        "so (1, 1) is not in the lower-level argmin as printed",
    )


@problem("DempeLohse2011Ex31b", "DL11", nx=3, ny=3, solution_ref="DL11")
def _(b):
    x1, x2, x3 = b.x
    y1, y2, y3 = b.y
    b.upper((x1 - 0.5) ** 2 + (x2 - 0.5) ** 2 + x3**2 - 3 * y1 - 3 * y2 - 6 * x3)
    b.lower(b.x.dot(b.y), [y1 + y2 + y3 - 2, -y1 + y2, -b.y])
    b.solution((0.5, 0.5, 0), (1, 1, 0), "local", label="local")
    b.solution((0.5, 0.5, 0), (0, 0, 2), "best_known", label="suggested")


@problem("DeSilva1978", "D78", nx=2, ny=2, solution_ref="CMS05")
def _(b):
    x1, x2 = b.x
    y1, y2 = b.y
    b.upper(x1**2 - 2 * x1 + x2**2 - 2 * x2 + y1**2 + y2**2)
    b.lower((y1 - x1) ** 2 + (y2 - x2) ** 2, [-b.y + 0.5, b.y - 1.5])
    b.values_only(-1.0, 0.0)
    b.claim(-1.0, 0.0)


@problem("EdmundsBard1991", "EB91", nx=2, ny=2, solution_ref="TMH07")
def _(b):
    x1, x2 = b.x
    y1, y2 = b.y
    b.upper(2 * x1 + 2 * x2 - 3 * y1 - 3 * y2 - 60, [-b.x, b.x - 50])
    b.lower(
        (y1 - x1 + 20) ** 2 + (y2 - x2 + 20) ** 2,
        [x1 + x2 + y1 - 2 * y2 - 40, 2 * b.y - b.x + 10, -10 - b.y, b.y - 20],
    )
    b.solution((0, 0), (-10, -10), "best_known")


@problem("FalkLiu1995", "FL95", nx=2, ny=2, solution_ref="CMS05")
def _(b):
    x1, x2 = b.x
    y1, y2 = b.y
    b.upper(x1**2 - 3 * x1 + x2**2 - 3 * x2 + y1**2 + y2**2)
    b.lower((y1 - x1) ** 2 + (y2 - x2) ** 2, [-b.y + 0.5, b.y - 1.5])
    b.solution((0.7537, 0.7537), (0.7463, 0.7463), "best_known")


@problem("FloudasZlobec1998", "FZ98", nx=1, ny=2, solution_ref="GF01, MB06")
def _(b):
    (x,) = b.x
    y1, y2 = b.y
    b.upper(x**3 * y1 + y2, [x - 1, -x])
    b.lower(-y2, [-y1 - 1, y1 - 1, -y2, y2 - 100, x * y1 - 10, y1**2 + x * y2 - 1])
    b.solution(1, (0, 1), "global")


@problem("GumusFloudas2001Ex1", "GF01", nx=1, ny=1, solution_ref="MB06")
def _(b):
    (x,), (y,) = b.x, b.y
    b.upper(16 * x**2 + 9 * y**2, [-x, x - 12.5, -4 * x + y])
    b.lower(power_of_affine([1, 1], -20, 4), [-y, y - 50, 4 * x + y - 50])
    b.solution(11.25, 5, "global")


@problem("GumusFloudas2001Ex3", "GF01", nx=2, ny=3, solution_ref="MB06")
def _(b):
    x1, x2 = b.x
    y1, y2, y3 = b.y
    b.upper(-8 * x1 - 4 * x2 + y1 - 40 * y2 - 4 * y3, [-b.x, b.x - 2])
    b.lower(
        Quotient(1 + x1 + x2 + 2 * y1 - y2 + y3, 6 + 2 * x1 + y1 + y2 - 3 * y3),
        [
            -b.y,
            b.y - 2,
            -y1 + y2 + y3 - 1,
            2 * x1 - y1 + 2 * y2 - 0.5 * y3 - 1,
            2 * x2 + 2 * y1 - y2 - 0.5 * y3 - 1,
        ],
    )
    # keep the denominator at least 1.5
    b.box(4, 0, 1.5)
    b.flag("domain_restricted")
    b.solution((0, 0.9), (0, 0.6, 0.4), "global")


@problem("GumusFloudas2001Ex4", "GF01", nx=1, ny=1, solution_ref="MB06")
def _(b):
    (x,), (y,) = b.x, b.y
    b.upper(
        (x - 3) ** 2 + (y - 2) ** 2,
        [-x, x - 8, -2 * x + y - 1, x - 2 * y + 2, x + 2 * y - 14],
    )
    b.lower((y - 5) ** 2, [-y, y - 10])
    b.solution(3, 5, "global")


@problem("GumusFloudas2001Ex5", "GF01", nx=1, ny=2, solution_ref="MB06")
def _(b):
    (x,) = b.x
    y1, y2 = b.y
    b.upper(x, [-x + 0.1, x - 10])
    b.lower(
        -y1 + 0.5864 * y1**0.67,
        [
            -b.y + 0.1,
            b.y - 10,
            0.0332333 * y2**-1 + 0.1 * y1 - 1,
            4 * x * y2**-1 + 2 * x**-0.71 * y2**-1 + 0.0332333 * x**-1.3 - 1,
        ],
    )
    b.flag("domain_restricted")
    b.solution(0.193616, (9.9667667, 10), "global")


@problem("HatzEtal2013", "HLSB13", nx=1, ny=2, solution_ref="HLSB13")
def _(b):
    (x,) = b.x
    y1, y2 = b.y
    b.upper(-x + 2 * y1 + y2)
    b.lower((x - y1) ** 2 + y2**2, [-b.y])
    b.solution(0, (0, 0), "global")


@problem("HendersonQuandt1958", "HQ58", nx=1, ny=1, solution_ref="FJQ99")
def _(b):
    (x,), (y,) = b.x, b.y
    b.upper(0.5 * x**2 + 0.5 * x * y - 95 * x, [x - 200, -x])
    b.lower(y**2 + (0.5 * x - 100) * y, [-y])
    # the lower-level minimizer 50 - x/4 ranges over [0, 100]
    b.lower_search_box([(0, 200)])
    b.solution(93.33333, 26.667, "best_known")


@problem(
    "HenrionSurowiec2011", "HS11", nx=1, ny=1,
    params=(ParamSpec("c", 1.0, description="real coefficient of y in F"),),
    solution_ref="HS11",
)
def _(b):
    (x,), (y,) = b.x, b.y
    c = b.p["c"]
    b.upper(x**2 + c * y)
    b.lower(0.5 * y**2 - x * y)
    b.solution(-0.5 * c, -0.5 * c, "global")
    # the lower-level minimizer is y = x, so search around the known point
    r = max(10.0, abs(c))
    b.lower_search_box([(-r, r)])

