import numpy as np
import pytest

from bilevel_problems import (
    BudgetExhausted,
    DimensionMismatch,
    NotSmooth,
    SolveConfig,
    build_mpcc,
    dump_mpcc,
    instantiate,
    mpcc_residual,
    solve_nested,
)
from bilevel_problems.solver import outer_box
from bilevel_problems.validation import feasibility
from bilevel_problems.core import Point


def test_bard_recovers_documented_optimum():
    res = solve_nested(instantiate("Bard1988Ex1"), SolveConfig(seed=1))
    assert abs(res.F - 17) <= 1e-2
    assert abs(res.x[0] - 1) <= 1e-2 and abs(res.y[0]) <= 1e-2
    assert res.complete


def test_henrion_surowiec_c1():
    res = solve_nested(instantiate("HenrionSurowiec2011", {"c": 1}))
    assert np.allclose([res.x[0], res.y[0]], [-0.5, -0.5], atol=1e-4)


def test_returned_point_is_feasible_and_deterministic():
    p = instantiate("ShimizuAiyoshi1981Ex2")
    a = solve_nested(p, SolveConfig(seed=2, multistarts=10, polish=2))
    b = solve_nested(p, SolveConfig(seed=2, multistarts=10, polish=2))
    assert a.as_dict() == b.as_dict() and a.trace == b.trace
    up, lo = feasibility(p, Point(a.x, a.y))
    assert up <= 1e-6 and lo <= 1e-6


def test_outer_box_from_linear_rows():
    box = outer_box(instantiate("ShimizuAiyoshi1981Ex2"))
    assert np.allclose(box, [[0, 20], [5, 15]])


def test_budget_marks_incomplete():
    res = solve_nested(instantiate("HenrionSurowiec2011"), SolveConfig(budget=8))
    assert not res.complete and res.evaluations == 8


def test_budget_exhausted_without_feasible_point():
    with pytest.raises(BudgetExhausted):
        solve_nested(instantiate("Bard1988Ex1"), SolveConfig(budget=8))


def test_config_validation():
    with pytest.raises(ValueError):
        SolveConfig(budget=0)
    with pytest.raises(ValueError):
        SolveConfig(penalty=-1)


def test_mpcc_dimensions():
    m = build_mpcc(instantiate("MuuQuy2003Ex1"))
    assert (m.n_x + m.n_y, m.n_lambda) == (3, 3)
    m = build_mpcc(instantiate("MacalHurter1997"))
    assert m.n_lambda == 0
    r = m.residuals([10.0], [1.0], [])
    assert r["lambda"].size == 0 and r["stationarity"].shape == (1,)


def test_mpcc_residual_examples():
    m = build_mpcc(instantiate("MitsosBarton2006Ex312"))
    assert mpcc_residual(m, [0.0], [0.0], [0.0, 0.0]) == 0.0
    assert mpcc_residual(m, [0.0], [0.0], [-0.7, 0.0]) >= 0.7
    m = build_mpcc(instantiate("LamparielloSagratella2017Ex31"))
    lam = np.zeros(m.n_lambda)
    lam[0] = 1.0
    assert mpcc_residual(m, [1.0], [0.0], lam) == 0.0


def test_mpcc_errors():
    with pytest.raises(NotSmooth):
        build_mpcc(instantiate("MorganPatrone2006b"))
    m = build_mpcc(instantiate("MitsosBarton2006Ex312"))
    with pytest.raises(DimensionMismatch):
        mpcc_residual(m, [0.0], [0.0], [0.0])


def test_mpcc_dump():
    m = build_mpcc(instantiate("MitsosBarton2006Ex312"))
    text = dump_mpcc(m, [0.0], [0.0], [0.0, 0.0])
    lines = text.splitlines()
    assert lines[0] == "mpcc MitsosBarton2006Ex312"
    assert lines[1] == "variables n_x=1 n_y=1 n_lambda=2"
    assert lines[-1] == "residual 0.0"
