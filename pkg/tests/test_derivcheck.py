import numpy as np
import pytest

from bilevel_problems import FdConfig, Func, Point, check_problem, instantiate
from bilevel_problems import derivcheck
from bilevel_problems.derivcheck import fd_first, fd_second


def test_fd_first_worked_example():
    p = instantiate("ShimizuEtal1997a")
    Fx = fd_first(p, Point(4, 0), Func.UpperObjective, "x")
    assert Fx.shape == (1, 1)
    assert abs(Fx[0, 0] + 2) <= 1e-6
    assert fd_first(p, Point(4, 0), Func.UpperConstraints, "y").shape == (0, 0)


def test_fd_second_constraint_stack():
    p = instantiate("ShimizuEtal1997a")
    gyy = fd_second(p, Point(4, 0), Func.LowerConstraints, "yy")
    assert gyy.shape == (3, 1)
    assert np.max(np.abs(gyy)) <= 1e-6


@pytest.mark.parametrize("name", ["ShimizuEtal1997a", "DempeDutta2012Ex31", "SinhaMaloDeb2014TP9", "NieEtal2017Ex54"])
def test_problem_passes(name):
    rep = check_problem(instantiate(name), FdConfig(seed=7))
    assert rep.passed, rep.failures()
    assert rep.accepted_points == 20
    assert all(s.points == 20 for s in rep.selectors.values())
    assert len(rep.selectors) == 20


def test_piecewise_problem_passes_with_skips():
    rep = check_problem(instantiate("LuDebSinha2016a"), FdConfig(seed=7))
    assert rep.passed
    assert rep.skipped.get("nonsmooth_point", 0) > 0
    rep = check_problem(instantiate("MorganPatrone2006b"), FdConfig(seed=7))
    assert rep.passed


def test_tolerance_below_noise_floor_fails():
    rep = check_problem(instantiate("ShimizuEtal1997a"), FdConfig(seed=7, rel_tol=1e-12, abs_tol=1e-12))
    assert not rep.passed


def test_deterministic():
    p = instantiate("Bard1988Ex1")
    assert check_problem(p, FdConfig(seed=3)).as_dict() == check_problem(p, FdConfig(seed=3)).as_dict()


def test_domain_violation_becomes_skip(monkeypatch):
    p = instantiate("GumusFloudas2001Ex5")
    wide = p.domain_box.copy()
    wide[0] = (-1.0, 1.0)
    monkeypatch.setattr(derivcheck, "sampling_box", lambda problem, eps: wide)
    rep = check_problem(p, FdConfig(seed=1, samples=5))
    assert rep.skipped.get("domain_violation", 0) > 0
    assert rep.accepted_points == 5


def test_config_validation():
    with pytest.raises(ValueError):
        FdConfig(eps=0)
    with pytest.raises(ValueError):
        FdConfig(samples=0)
