"""Quadrature layer: composite Gauss exactness, graded endpoint charts,
dual-route area checks and the divergence self-test."""
import math

import numpy as np
import pytest

from tricomi.errors import NonConvergence
from tricomi.geometry import BoundaryCurveId, omega1, omega2, omega3, omega4
from tricomi.quad import (QuadConfig, Residual, UnitSquare, check_two_level,
                          divergence_selftest, domain_grids,
                          integrate_boundary, integrate_curve,
                          integrate_domain, integrate_interval,
                          integrate_neg_interval)


def test_quad_config_validation():
    cfg = QuadConfig()
    assert cfg.gauss_order == 16 and cfg.panels_per_axis == 32
    assert cfg.grade_endpoints and cfg.abs_tol == 1e-10 and cfg.rel_tol == 1e-9
    c = cfg.coarse()
    assert c.panels_per_axis == 16
    with pytest.raises(ValueError):
        QuadConfig(gauss_order=0)
    with pytest.raises(ValueError):
        QuadConfig(panels_per_axis=0)
    with pytest.raises(ValueError):
        QuadConfig(abs_tol=-1.0)


def test_residual_errors():
    r = Residual(2.0, 1.0)
    assert r.abs_err == 1.0
    assert r.rel_err == pytest.approx(0.25)


def test_check_two_level():
    cfg = QuadConfig()
    assert check_two_level(1.0, 1.0 + 1e-12, cfg) == 1.0
    with pytest.raises(NonConvergence) as ei:
        check_two_level(1.0, 1.1, cfg)
    assert "did not settle" in str(ei.value)


def test_interval_gauss_exactness():
    # order-2 Gauss integrates cubics exactly
    cfg = QuadConfig(gauss_order=2, panels_per_axis=1)
    got = integrate_interval(lambda t: t ** 3, 0.0, 1.0, cfg)
    assert got == pytest.approx(0.25, abs=1e-15)
    got = integrate_interval(lambda t: 3 * t ** 2 - t, -1.0, 2.0, cfg)
    assert got == pytest.approx(9.0 - 1.5, abs=1e-13)


def test_neg_interval_graded_handles_half_powers():
    # int_{-1}^0 (-t)^(-1/2) dt = 2; the graded chart makes it polynomial
    cfg = QuadConfig()
    got = integrate_neg_interval(lambda t: (-t) ** -0.5, -1.0, cfg)
    assert got == pytest.approx(2.0, abs=1e-13)
    with pytest.raises(ValueError):
        integrate_neg_interval(lambda t: t, 1.0, cfg)
    # ungraded composite Gauss cannot settle on the singular integrand
    with pytest.raises(NonConvergence):
        integrate_neg_interval(lambda t: (-t) ** -0.5, -1.0, cfg, graded=False)


def test_unit_square():
    sq = UnitSquare()
    cfg = QuadConfig(gauss_order=4, panels_per_axis=4)
    assert integrate_domain(lambda x, y: np.ones_like(x), sq, cfg) == \
        pytest.approx(1.0, abs=1e-13)
    # flux form of the position field over the boundary: area * div = 2
    val = integrate_boundary(lambda x, y: (-y, x), sq, cfg)
    assert val == pytest.approx(2.0, abs=1e-13)


def fixtures():
    return [omega1(1, 4, -0.5), omega2(1, 4, 0.5),
            omega3(1, 4, -0.5), omega4(1, 0, -0.5)]


def test_area_dual_route():
    # interior measure two ways: tensor grids vs (1/2) loop of x dy - y dx
    cfg = QuadConfig()
    for dom in fixtures():
        direct = integrate_domain(lambda x, y: np.ones_like(x), dom, cfg)
        loop = 0.5 * integrate_boundary(lambda x, y: (-y, x), dom, cfg)
        assert direct == pytest.approx(loop, abs=1e-12)
        assert direct > 0.0


def test_omega1_area_against_independent_route():
    # third route, outside the quad module: 1-D slice integral for the
    # triangle (trapezoid rule, fine grid) plus the half-disk cap area
    dom = omega1(1, 4, -0.5)
    y_c = dom.apex.y
    y = np.linspace(y_c, 0.0, 1_000_001)
    x_bc = -(2.0 ** (1.0 / 3.0)) * np.sqrt(-y)
    g = -1.0 + 2.0 * (-y) ** 1.5
    x_ac = -np.cbrt(-g)   # odd root of (2x0)^3 + 2(-y)^(3/2) with 2x0 = -1
    tri = float(np.trapezoid(x_bc - x_ac, y))
    cap = 0.5 * math.pi * 0.5 ** 2
    expected = tri + cap
    got = integrate_domain(lambda x, y: np.ones_like(x), dom, QuadConfig())
    assert got == pytest.approx(expected, abs=1e-8)


def test_starlike_form_loop_vanishes_on_bc():
    dom = omega1(1, 4, -0.5)
    co_c1, co_c2 = 3.0, 6.0
    val = integrate_curve(lambda x, y: (-co_c2 * y, co_c1 * x), dom,
                          BoundaryCurveId.BC, QuadConfig())
    assert abs(val) <= 1e-14


def test_closed_loop_of_exact_differential():
    # the loop integral of d(x y) vanishes on every fixture boundary
    cfg = QuadConfig()
    for dom in fixtures():
        val = integrate_boundary(lambda x, y: (y, x), dom, cfg)
        assert abs(val) <= 1e-12


def test_bc_fractional_integrand_graded_vs_not():
    # int_BC (-y)^(1/2) dy has the closed value (2/3)(-y_c)^(3/2); the graded
    # chart is exact while the ungraded one stalls above 1e-10
    dom = omega1(1, 4, -0.5)
    y_c = dom.apex.y
    expected = (2.0 / 3.0) * (-y_c) ** 1.5

    def form(x, y):
        return (np.zeros_like(x), (-y) ** 0.5)

    graded = integrate_curve(form, dom, BoundaryCurveId.BC, QuadConfig())
    assert graded == pytest.approx(expected, abs=1e-12)
    loose = QuadConfig(grade_endpoints=False, abs_tol=1.0, rel_tol=1.0)
    ungraded = integrate_curve(form, dom, BoundaryCurveId.BC, loose)
    assert abs(ungraded - expected) > 1e-10


def test_refinement_improves_before_floor():
    # panel doubling shrinks the error of a non-polynomial area integrand
    dom = omega1(1, 4, -0.5)

    def g(x, y):
        return np.exp(x + 0.5 * y)

    loose = dict(abs_tol=1.0, rel_tol=1.0)
    vals = {}
    for panels in (2, 4, 8):
        cfg = QuadConfig(gauss_order=2, panels_per_axis=panels, **loose)
        vals[panels] = integrate_domain(g, dom, cfg)
    ref = integrate_domain(g, dom, QuadConfig())
    e2, e4, e8 = (abs(vals[p] - ref) for p in (2, 4, 8))
    assert e4 < e2 and e8 < e4
    assert e8 < e2 / 10.0


def test_divergence_selftest_fixtures():
    cfg = QuadConfig()
    for dom in fixtures() + [UnitSquare()]:
        r = divergence_selftest(dom, cfg)
        assert r.rel_err <= 1e-12


def test_grids_are_cached():
    dom = omega1(1, 4, -0.5)
    cfg = QuadConfig()
    assert domain_grids(dom, cfg) is domain_grids(dom, cfg)


def test_nonconvergence_on_rough_integrand():
    # a kink inside the domain defeats the two-level check at default tol
    dom = omega1(1, 4, -0.5)

    def g(x, y):
        return np.abs(x + 0.5) ** 1.1

    with pytest.raises(NonConvergence):
        integrate_domain(g, dom, QuadConfig(gauss_order=2, panels_per_axis=2,
                                            abs_tol=1e-14, rel_tol=1e-13))
