import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bilevel_problems import NotCheckable, Point, instantiate, kkt_residual, lookup, lower_level_oracle, record, validate
from bilevel_problems.core import Dimensions, ProblemDefinition
from bilevel_problems.validation import (
    OracleConfig,
    Tolerances,
    classify,
    criterion_status,
    feasibility,
    kkt_multipliers,
    SolutionCheck,
)


@pytest.mark.parametrize(
    "name, x, y_opt, f_opt",
    [("Bard1988Ex1", 1.0, 0.0, 1.0), ("MitsosBarton2006Ex310", 0.5, 0.5, -0.5), ("HenrionSurowiec2011", -0.5, -0.5, -0.125)],
)
def test_oracle_examples(name, x, y_opt, f_opt):
    res = lower_level_oracle(instantiate(name), np.array([x]))
    assert res.mode == "grid" and not res.partial
    assert abs(res.y[0] - y_opt) <= 1e-6
    assert abs(res.f - f_opt) <= 1e-9


def test_oracle_large_lower_level_is_partial():
    p = instantiate("SinhaMaloDeb2014TP9")
    res = lower_level_oracle(p, np.zeros(p.dims.n_x), OracleConfig(multistarts=3))
    assert res.mode == "multistart" and res.partial


def test_kkt_examples():
    assert kkt_residual(instantiate("MitsosBarton2006Ex312"), Point([0], [0])) == 0.0
    p = instantiate("OutrataCervinka2009")
    assert kkt_residual(p, Point(np.zeros(2), np.zeros(2))) <= 1e-12
    with pytest.raises(NotCheckable):
        kkt_residual(instantiate("MorganPatrone2006b"), Point([0.5], [0.5]))


def test_kkt_multiplier_of_active_row():
    res, lam = kkt_multipliers(instantiate("LamparielloSagratella2017Ex31"), Point([1], [0]))
    assert res <= 1e-12
    assert np.isclose(lam.max(), 1.0)


@settings(max_examples=25, deadline=None)
@given(st.floats(min_value=0.1, max_value=100))
def test_kkt_zero_invariant_under_row_scaling(scale):
    # lower level: min (y - x)^2 s.t. y - 1 <= 0, at x = 2 the row is active
    from bilevel_problems.core import as_piece
    from bilevel_problems.poly import variables

    (x,), (y,) = variables(1, 1)
    box, lower = np.array([[-5.0, 5.0], [-5.0, 5.0]]), np.array([[-5.0, 5.0]])

    def make(row):
        return ProblemDefinition("scaled", Dimensions(1, 1, 0, 1), as_piece(x), (), as_piece((y - x) ** 2),
                                 (as_piece(row),), {}, box, lower)

    base, scaled = make(y - 1), make(scale * (y - 1))
    pt = Point([2.0], [1.0])
    assert kkt_residual(base, pt) <= 1e-12
    assert kkt_residual(scaled, pt) <= 1e-9


def test_verdicts():
    checks = validate(record("AiyoshiShimizu1984Ex2")).solutions
    assert [(c.status, c.verdict) for c in checks] == [("global", "confirmed"), ("local", "confirmed")]
    checks = validate(record("ShimizuAiyoshi1981Ex1")).solutions
    assert [c.verdict for c in checks] == ["confirmed"]


def test_cited_infeasible_point_is_documented():
    rec = record("LuDebSinha2016a")
    v = validate(rec)
    assert v.solutions[0].verdict == "infeasible"
    assert criterion_status(v, rec) == [(0, "documented"), (1, "documented")]
    assert {f["kind"] for f in v.findings} == {"documented_discrepancy"}


def test_claim_conflict_finding():
    v = validate(record("Bard1988Ex2"))
    kinds = [f["kind"] for f in v.findings]
    assert kinds == ["claim_conflict", "value_only", "value_only"]
    assert "57.48" in v.findings[0]["detail"] and "54" in v.findings[0]["detail"]
    assert [f["detail"]["claimed_f"] for f in v.findings[1:]] == [57.48, 54]


def test_not_checkable_problem():
    v = validate(record("Zlobec2001b"))
    assert v.not_checkable == "no_optimal_solution"
    assert v.as_dict()["findings"][0]["kind"] == "not_checkable"


def test_parametric_solutions_validate():
    problem, rec = lookup("CalamaiVicente1994a", {"rho": 2})
    assert [c.verdict for c in validate(rec, problem).solutions] == ["confirmed", "confirmed"]


def test_feasibility_residuals():
    p = instantiate("LuDebSinha2016a")
    up, lo = feasibility(p, Point([1.4], [0.2]))
    assert abs(up - 0.4) <= 1e-12 and lo == 0.0


def test_classify_precedence():
    tol = Tolerances()
    c = SolutionCheck(0, "", "global", "", upper_residual=1.0, lower_residual=0.0, gap=5.0, F_error=9.0)
    assert classify(c, 0.0, None, tol) == "infeasible"
    c.upper_residual = 0.0
    assert classify(c, 0.0, None, tol) == "feasible_but_suboptimal"
    c.gap = 0.0
    assert classify(c, 0.0, None, tol) == "value_mismatch"
    c.F_error = 1e-4
    assert classify(c, 0.0, None, tol) == "confirmed"
