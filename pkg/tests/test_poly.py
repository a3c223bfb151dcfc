import numpy as np
from hypothesis import given, settings
from hypothesis import strategies as st

from bilevel_problems.poly import Poly, variables

coords = st.floats(min_value=-3, max_value=3, allow_nan=False)


def _p():
    (x1, x2), (y,) = variables(2, 1)
    return (x1 - 2) ** 2 * y + 3 * x2 * y**3 - 0.5 * x1 * x2 + 7


def test_values_and_power_rule():
    p = _p()
    z = np.array([1.0, 2.0, -1.0])
    # (1-2)^2*(-1) + 3*2*(-1) - 0.5*2 + 7
    assert p(z) == -1.0
    # d/dx1 = 2(x1-2)y - 0.5 x2 ; d/dx2 = 3y^3 - 0.5 x1 ; d/dy = (x1-2)^2 + 9 x2 y^2
    assert p.grad(z).tolist() == [1.0, -3.5, 19.0]
    H = p.hess(z)
    assert H.tolist() == [[-2.0, -0.5, -2.0], [-0.5, 0.0, 9.0], [-2.0, 9.0, -36.0]]


def test_linear_coefficients():
    (x,), (y1, y2) = variables(1, 2)
    p = 2 * x - y2 + 4
    assert p.is_linear()
    a, c = p.linear_coefficients()
    assert a.tolist() == [2.0, 0.0, -1.0] and c == 4.0
    assert not (x * y1).is_linear()


def test_negative_exponent():
    (x,), (y,) = variables(1, 1)
    p = 4 * x * y**-1
    z = np.array([2.0, 4.0])
    assert p(z) == 2.0
    assert p.grad(z).tolist() == [1.0, -0.5]


@settings(max_examples=60, deadline=None)
@given(st.lists(st.tuples(coords, coords, coords), min_size=1, max_size=8))
def test_batch_matches_pointwise(rows):
    p = _p()
    Z = np.array(rows)
    batch = p(Z)
    assert np.allclose(batch, [p(z) for z in Z], rtol=1e-12, atol=1e-12)


@settings(max_examples=60, deadline=None)
@given(coords, coords, coords)
def test_hessian_symmetric(a, b, c):
    H = _p().hess(np.array([a, b, c]))
    assert np.array_equal(H, H.T)


def test_const_and_var():
    assert Poly.const(2, 3.0)(np.zeros(2)) == 3.0
    assert Poly.var(2, 1)(np.array([5.0, 6.0])) == 6.0
