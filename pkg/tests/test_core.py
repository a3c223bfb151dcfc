import numpy as np
import pytest

from bilevel_problems import (
    ALL_SELECTORS,
    DERIVATIVE_SELECTORS,
    Deriv,
    Dimensions,
    DimensionMismatch,
    DomainViolation,
    EvalSelector,
    Func,
    Point,
    evaluate,
    instantiate,
    names,
    shape_of,
)
from bilevel_problems.core import split_equalities
from bilevel_problems.poly import variables


def ev(name, x, y, keyf, keyxy=None, params=None):
    return evaluate(instantiate(name, params), Point(x, y), EvalSelector.parse(keyf, keyxy))


def test_selector_counts():
    assert len(ALL_SELECTORS) == 24
    assert len(DERIVATIVE_SELECTORS) == 20
    assert EvalSelector.parse("g", "yy").key == "gyy"
    assert EvalSelector.parse("F").deriv is Deriv.Value


def test_worked_example_values():
    assert ev("ShimizuEtal1997a", 4, 0, "F").tolist() == [[2.0]]
    assert ev("ShimizuEtal1997a", 4, 0, "F", "x").tolist() == [[-2.0]]
    assert ev("ShimizuEtal1997a", 4, 0, "G", "y").shape == (0, 0)
    assert ev("ShimizuEtal1997a", 4, 0, "f", "xy").tolist() == [[-1.5]]
    assert ev("ShimizuEtal1997a", 4, 0, "g", "yy").tolist() == [[0.0], [0.0], [0.0]]


def test_spot_values():
    assert ev("AiyoshiShimizu1984Ex2", (25, 30), (5, 10), "F")[0, 0] == 5.0
    assert ev("Bard1988Ex1", 1, 0, "F")[0, 0] == 17.0
    assert ev("Bard1988Ex1", 1, 0, "f")[0, 0] == 1.0


def test_shape_of_examples():
    assert shape_of(Dimensions(1, 1, 0, 3), EvalSelector(Func.LowerConstraints, Deriv.Dyy)) == (3, 1)
    assert shape_of(Dimensions(2, 2, 3, 0), EvalSelector(Func.UpperConstraints, Deriv.Dxy)) == (6, 2)
    assert shape_of(Dimensions(2, 3, 0, 0), EvalSelector(Func.UpperObjective, Deriv.Dxy)) == (3, 2)
    assert shape_of(Dimensions(2, 3, 0, 0), EvalSelector(Func.UpperConstraints, Deriv.Dx)) == (0, 0)


def test_linear_F_has_zero_hessian():
    H = ev("AiyoshiShimizu1984Ex2", (25, 30), (5, 10), "F", "xx")
    assert H.shape == (2, 2) and not H.any()


def test_dimension_mismatch():
    with pytest.raises(DimensionMismatch):
        ev("Bard1991Ex1", 2, 6, "F")


def test_domain_violation():
    with pytest.raises(DomainViolation):
        ev("GumusFloudas2001Ex5", -1.0, (5, 5), "F")


def test_split_equalities_rows():
    x, y = variables(1, 1)
    (H,) = x
    (Y,) = y
    plus_minus, _ = split_equalities([H - Y], [])
    z = np.array([1.0, 1.0])
    assert [p.value(z) for p in plus_minus] == [0.0, 0.0]
    z = np.array([2.0, 1.0])
    assert [p.value(z) for p in plus_minus] == [1.0, -1.0]


def test_split_equalities_negated_jacobian():
    rng = np.random.default_rng(3)
    p = instantiate("DempeDutta2012Ex31")
    n_ineq = p.dims.n_G - 2
    for _ in range(10):
        z = rng.uniform(-1, 1, p.dims.n)
        plus, minus = p.G[n_ineq], p.G[n_ineq + 1]
        assert np.array_equal(minus.grad(z), -plus.grad(z))


def test_hessians_symmetric_and_pure():
    rng = np.random.default_rng(0)
    for name in names():
        p = instantiate(name)
        z = rng.uniform(p.domain_box[:, 0], p.domain_box[:, 1])
        pt = Point.from_z(z, p.dims.n_x)
        for fn in (Func.UpperObjective, Func.LowerObjective):
            for d in (Deriv.Dxx, Deriv.Dyy):
                with np.errstate(all="ignore"):
                    a = evaluate(p, pt, EvalSelector(fn, d))
                    b = evaluate(p, pt, EvalSelector(fn, d))
                assert np.array_equal(a, b, equal_nan=True)
                finite = np.isfinite(a)
                assert np.array_equal(a[finite], a.T[finite]), (name, fn, d)


def test_empty_rule_without_G():
    p = instantiate("CalamaiVicente1994a")
    assert p.dims.n_G == 0
    pt = Point([0.5], [0.5])
    for d in Deriv:
        assert evaluate(p, pt, EvalSelector(Func.UpperConstraints, d)).shape == (0, 0)
