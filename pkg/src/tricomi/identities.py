"""Integral identities tying the dilation generator D = -c1 x dx - c2 y dy
to the operator O = -y^m1 dxx - x^m2 dyy on the four domain variants, plus
the one-dimensional weighted Hardy package controlling the boundary term.

Every identity is checked by computing left and right sides through
independent quadratures (area functionals vs boundary flux), never by
rearranging one side into the other.  A divergence self-test must pass on
the domain before any identity integral is trusted.
"""
from __future__ import annotations

import json
import math
import time
from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from functools import lru_cache

import numpy as np

from .errors import (DegenerateDenominator, NonConvergence, OutOfRange,
                     PreconditionViolated)
from .field import (SampleFn1D, ScalarField, D_from_jet, O_from_jet, X_from_jet,
                    energy_from_jet, jet2, norm_from_jet, to_prefix)
from .geometry import (BoundaryCurveId, DomainSpec, Point, Vec2,
                       check_starshaped, omega1, omega2, omega3, omega4)
from .params import (Coefficients, NonlinearitySpec, OperatorParams,
                     coefficients)
from . import quad
from .quad import QuadConfig, Residual, check_two_level, divergence_selftest

__all__ = [
    "IdentityReport",
    "HardyParams",
    "REPORT_PASS_RTOL",
    "omega_forms",
    "step1_residual",
    "step2_residual",
    "step3_residual",
    "pohozaev_residual",
    "sigma_boundary_sign",
    "scaling_ratios",
    "hardy_weight_exponents",
    "hardy_GL",
    "hardy_GL_numeric",
    "hardy_constants",
    "boundary_energy_I",
    "hardy_inequality_check",
    "equivalence_chain",
    "polynomial_sample_fn",
    "random_hardy_phi",
    "random_boundary_phi",
    "reference_domains",
]

REPORT_PASS_RTOL = 1e-6


@dataclass(frozen=True)
class IdentityReport:
    identity: str
    variant: str
    m1: int
    m2: int
    anchor: float
    field: str
    f: str
    lhs: float
    rhs: float
    defect: float
    sides: dict
    quad: dict
    passed: bool
    seconds: float
    note: str = ""

    @property
    def abs_err(self) -> float:
        return abs(self.lhs - self.rhs - self.defect)

    @property
    def rel_err(self) -> float:
        return self.abs_err / (abs(self.lhs) + abs(self.rhs + self.defect) + 1.0)

    def to_json(self) -> str:
        d = {
            "identity": self.identity,
            "variant": self.variant,
            "m1": self.m1,
            "m2": self.m2,
            "anchor": self.anchor,
            "field": self.field,
            "f": self.f,
            "lhs": self.lhs,
            "rhs": self.rhs,
            "defect": self.defect,
            "sides": self.sides,
            "quad": self.quad,
            "abs_err": self.abs_err,
            "rel_err": self.rel_err,
            "pass": self.passed,
            "seconds": self.seconds,
            "note": self.note,
        }
        return json.dumps(d, sort_keys=True)

    @staticmethod
    def from_json(text: str) -> "IdentityReport":
        d = json.loads(text)
        return IdentityReport(
            identity=d["identity"], variant=d["variant"], m1=d["m1"], m2=d["m2"],
            anchor=d["anchor"], field=d["field"], f=d["f"], lhs=d["lhs"],
            rhs=d["rhs"], defect=d["defect"], sides=d["sides"], quad=d["quad"],
            passed=d["pass"], seconds=d["seconds"], note=d.get("note", ""))

    def with_seconds(self, seconds: float) -> "IdentityReport":
        return IdentityReport(self.identity, self.variant, self.m1, self.m2,
                              self.anchor, self.field, self.f, self.lhs,
                              self.rhs, self.defect, self.sides, self.quad,
                              self.passed, seconds, self.note)


def _quad_dict(cfg: QuadConfig) -> dict:
    return {
        "gauss_order": cfg.gauss_order,
        "panels_per_axis": cfg.panels_per_axis,
        "grade_endpoints": cfg.grade_endpoints,
        "abs_tol": cfg.abs_tol,
        "rel_tol": cfg.rel_tol,
    }


def reference_domains() -> list[DomainSpec]:
    """The four standard fixtures, one per variant."""
    return [omega1(1, 4, -0.5), omega2(1, 4, 0.5),
            omega3(1, 4, -0.5), omega4(1, 0, -0.5)]


# ---------------------------------------------------------------------------
# cached jets on quadrature grids

@lru_cache(maxsize=8)
def _area_jets(u: ScalarField, domain: DomainSpec, cfg: QuadConfig):
    fine, coarse = quad.domain_grids(domain, cfg)
    return ((fine, u.jet(fine.x, fine.y)), (coarse, u.jet(coarse.x, coarse.y)))


@lru_cache(maxsize=48)
def _curve_jets(u: ScalarField, domain: DomainSpec, curve_id: BoundaryCurveId,
                cfg: QuadConfig):
    fine, coarse = quad.curve_grids(domain, curve_id, cfg)
    return ((fine, u.jet(fine.x, fine.y)), (coarse, u.jet(coarse.x, coarse.y)))


def _area_functional(u, domain, cfg, density) -> float:
    (gf, jf), (gc, jc) = _area_jets(u, domain, cfg)
    vf = float(np.sum(np.asarray(density(jf, gf.x, gf.y), float) * gf.w))
    vc = float(np.sum(np.asarray(density(jc, gc.x, gc.y), float) * gc.w))
    return check_two_level(vf, vc, cfg, "area functional")


def _curve_functional(u, domain, curve_id, cfg, form) -> float:
    (gf, jf), (gc, jc) = _curve_jets(u, domain, curve_id, cfg)

    def total(g, j):
        p, q = form(j, g.x, g.y)
        p = np.broadcast_to(np.asarray(p, float), g.x.shape)
        q = np.broadcast_to(np.asarray(q, float), g.x.shape)
        return float(np.sum(p * g.wx) + np.sum(q * g.wy))

    return check_two_level(total(gf, jf), total(gc, jc), cfg,
                           f"curve functional on {curve_id.value}")


@lru_cache(maxsize=32)
def _ensure_oriented(domain: DomainSpec, cfg: QuadConfig) -> bool:
    # orientation soundness must be established before identities are trusted
    r = divergence_selftest(domain, cfg)
    gate = max(1e-8, 10.0 * cfg.rel_tol)
    if r.rel_err > gate:
        raise NonConvergence(
            f"divergence self-test rel error {r.rel_err:.3e} exceeds {gate:.1e}; "
            "charts, weights or orientation are unsound at this resolution")
    return True


def _require_vanishing(u, domain, curve_ids, cfg, what: str):
    # sample each named piece; tolerance is relative to the field size on
    # the whole boundary so an honestly nonzero field always trips it
    charts = {c.curve: c for c in
              (quad._boundary_charts_of(domain, cfg.grade_endpoints))}
    scale = 1.0
    vals = {}
    for cid, chart in charts.items():
        tau = chart.lo + (chart.hi - chart.lo) * (np.arange(100) + 0.5) / 100.0
        x, y, _, _ = chart.fn(tau)
        v = np.asarray(u(np.asarray(x, float), np.asarray(y, float)), float)
        vals[cid] = float(np.max(np.abs(v)))
        scale = max(scale, vals[cid])
    for cid in curve_ids:
        if vals[cid] > 1e-10 * scale:
            raise PreconditionViolated(
                f"{what} needs u = 0 on {cid.value}; sampled max |u| = "
                f"{vals[cid]:.3e}")


def _check_F_zero(nonlin: NonlinearitySpec):
    if abs(float(nonlin.F(0.0))) > 1e-14:
        raise PreconditionViolated(
            f"nonlinearity {nonlin.name!r} needs F(0) = 0")


# ---------------------------------------------------------------------------
# the boundary 1-forms

def _w1_form(params, co):
    m1, m2 = params.m1, params.m2
    c1, c2 = co.c1, co.c2

    def form(j, x, y):
        xu_x, xu_y = X_from_jet(params, j, x, y)
        du = D_from_jet(co, j, x, y)
        e = energy_from_jet(params, j, x, y)
        gx = 2.0 * du * xu_x + e * (-c1 * x)
        gy = 2.0 * du * xu_y + e * (-c2 * y)
        return -gy, gx   # flux 1-form of the vector (gx, gy)

    return form


def _w2_form(params, co, nonlin):
    c1, c2 = co.c1, co.c2
    c = float(co.c)

    def form(j, x, y):
        xu_x, xu_y = X_from_jet(params, j, x, y)
        fu = np.asarray(nonlin.F(j.u), float)
        gx = -2.0 * fu * (-c1 * x) - 2.0 * c * j.u * xu_x
        gy = -2.0 * fu * (-c2 * y) - 2.0 * c * j.u * xu_y
        return -gy, gx

    return form


def omega_forms(params: OperatorParams, u: ScalarField, nonlin: NonlinearitySpec,
                p: Point, eta: Vec2) -> tuple[float, float]:
    """The two boundary densities (w1, w2) dotted with a given direction:
    w1 = [2 Du Xu + E V] . eta and w2 = [-2 F(u) V - 2 c u Xu] . eta,
    where V = (-c1 x, -c2 y)."""
    co = coefficients(params)
    j = jet2(u, p)
    xu_x, xu_y = X_from_jet(params, j, p.x, p.y)
    du = D_from_jet(co, j, p.x, p.y)
    e = energy_from_jet(params, j, p.x, p.y)
    vx, vy = -co.c1 * p.x, -co.c2 * p.y
    c = float(co.c)
    fu = float(nonlin.F(j.u))
    w1 = (2.0 * du * xu_x + e * vx) * eta.x + (2.0 * du * xu_y + e * vy) * eta.y
    w2 = (-2.0 * fu * vx - 2.0 * c * j.u * xu_x) * eta.x \
        + (-2.0 * fu * vy - 2.0 * c * j.u * xu_y) * eta.y
    return float(w1), float(w2)


# ---------------------------------------------------------------------------
# step identities

def _report(identity, domain, field_str, f_str, lhs, rhs, defect, sides, cfg,
            seconds, note="") -> IdentityReport:
    rep = IdentityReport(
        identity=identity, variant=domain.variant.value,
        m1=domain.params.m1, m2=domain.params.m2, anchor=domain.anchor,
        field=field_str, f=f_str, lhs=lhs, rhs=rhs, defect=defect,
        sides=sides, quad=_quad_dict(cfg), passed=False, seconds=seconds,
        note=note)
    passed = rep.rel_err <= REPORT_PASS_RTOL
    return IdentityReport(identity, domain.variant.value, domain.params.m1,
                          domain.params.m2, domain.anchor, field_str, f_str,
                          lhs, rhs, defect, sides, _quad_dict(cfg), passed,
                          seconds, note)


def step1_residual(u: ScalarField, domain: DomainSpec,
                   cfg: QuadConfig = QuadConfig()) -> IdentityReport:
    """For u vanishing on AC:
    2 * int D(u) O(u) = 2c * int E + int_{BC u sigma} w1."""
    t0 = time.perf_counter()
    _ensure_oriented(domain, cfg)
    _require_vanishing(u, domain, [BoundaryCurveId.AC], cfg, "step1")
    params, co = domain.params, coefficients(domain.params)
    c = float(co.c)

    lhs = _area_functional(u, domain, cfg, lambda j, x, y:
                           D_from_jet(co, j, x, y) * O_from_jet(params, j, x, y))
    e_int = _area_functional(u, domain, cfg, lambda j, x, y:
                             energy_from_jet(params, j, x, y))
    w1 = _w1_form(params, co)
    b = _curve_functional(u, domain, BoundaryCurveId.BC, cfg, w1) \
        + _curve_functional(u, domain, BoundaryCurveId.SIGMA, cfg, w1)
    rhs = c * e_int + 0.5 * b
    sides = {"energy_integral": e_int, "omega1_boundary": b}
    return _report("step1", domain, to_prefix(u), "", lhs, rhs, 0.0, sides,
                   cfg, time.perf_counter() - t0)


def step2_residual(u: ScalarField, nonlin: NonlinearitySpec, domain: DomainSpec,
                   cfg: QuadConfig = QuadConfig()) -> IdentityReport:
    """For u vanishing on AC and sigma, F(0) = 0:
    int D(u) f(u) = kappa * int F(u) + int_BC F(u) V . eta."""
    t0 = time.perf_counter()
    _ensure_oriented(domain, cfg)
    _check_F_zero(nonlin)
    _require_vanishing(u, domain, [BoundaryCurveId.AC, BoundaryCurveId.SIGMA],
                       cfg, "step2")
    params, co = domain.params, coefficients(domain.params)
    c1, c2 = co.c1, co.c2

    lhs = _area_functional(u, domain, cfg, lambda j, x, y:
                           D_from_jet(co, j, x, y) * np.asarray(nonlin.f(j.u), float))
    f_int = _area_functional(u, domain, cfg, lambda j, x, y:
                             np.asarray(nonlin.F(j.u), float))

    def fv_form(j, x, y):
        fu = np.asarray(nonlin.F(j.u), float)
        return -fu * (-c2 * y), fu * (-c1 * x)

    bc = _curve_functional(u, domain, BoundaryCurveId.BC, cfg, fv_form)
    rhs = float(co.kappa) * f_int + bc
    sides = {"F_integral": f_int, "FV_flux_BC": bc}
    return _report("step2", domain, to_prefix(u), nonlin.name, lhs, rhs, 0.0,
                   sides, cfg, time.perf_counter() - t0)


def step3_residual(u: ScalarField, domain: DomainSpec,
                   cfg: QuadConfig = QuadConfig()) -> IdentityReport:
    """For u vanishing on AC and sigma:
    int u O(u) = int E + int_BC u Xu . eta."""
    t0 = time.perf_counter()
    _ensure_oriented(domain, cfg)
    _require_vanishing(u, domain, [BoundaryCurveId.AC, BoundaryCurveId.SIGMA],
                       cfg, "step3")
    params, co = domain.params, coefficients(domain.params)

    lhs = _area_functional(u, domain, cfg, lambda j, x, y:
                           j.u * O_from_jet(params, j, x, y))
    e_int = _area_functional(u, domain, cfg, lambda j, x, y:
                             energy_from_jet(params, j, x, y))

    def uxu_form(j, x, y):
        xu_x, xu_y = X_from_jet(params, j, x, y)
        return -j.u * xu_y, j.u * xu_x

    bc = _curve_functional(u, domain, BoundaryCurveId.BC, cfg, uxu_form)
    rhs = e_int + bc
    sides = {"energy_integral": e_int, "uXu_flux_BC": bc}
    return _report("step3", domain, to_prefix(u), "", lhs, rhs, 0.0, sides,
                   cfg, time.perf_counter() - t0)


def pohozaev_residual(u: ScalarField, nonlin: NonlinearitySpec, domain: DomainSpec,
                      cfg: QuadConfig = QuadConfig()) -> IdentityReport:
    """Dilation identity with explicit defect:
    kappa int F(u) - c int u f(u)
      = (1/2)[int_{BC u sigma} w1 + int_BC w2] + int (Du - c u)(f(u) - O u).
    For a true solution (O u = f(u)) the defect vanishes."""
    t0 = time.perf_counter()
    _ensure_oriented(domain, cfg)
    _check_F_zero(nonlin)
    _require_vanishing(u, domain, [BoundaryCurveId.AC, BoundaryCurveId.SIGMA],
                       cfg, "pohozaev")
    params, co = domain.params, coefficients(domain.params)
    c = float(co.c)

    f_int = _area_functional(u, domain, cfg, lambda j, x, y:
                             np.asarray(nonlin.F(j.u), float))
    uf_int = _area_functional(u, domain, cfg, lambda j, x, y:
                              j.u * np.asarray(nonlin.f(j.u), float))
    lhs = float(co.kappa) * f_int - c * uf_int

    w1 = _w1_form(params, co)
    w2 = _w2_form(params, co, nonlin)
    b1 = _curve_functional(u, domain, BoundaryCurveId.BC, cfg, w1) \
        + _curve_functional(u, domain, BoundaryCurveId.SIGMA, cfg, w1)
    b2 = _curve_functional(u, domain, BoundaryCurveId.BC, cfg, w2)
    rhs = 0.5 * (b1 + b2)

    defect = _area_functional(u, domain, cfg, lambda j, x, y:
                              (D_from_jet(co, j, x, y) - c * j.u)
                              * (np.asarray(nonlin.f(j.u), float)
                                 - O_from_jet(params, j, x, y)))
    sides = {"F_integral": f_int, "uf_integral": uf_int,
             "omega1_boundary": b1, "omega2_boundary_BC": b2}
    note = ("defect form: the identity is conditional on O u = f(u); "
            "for manufactured fields the defect term closes it exactly")
    return _report("pohozaev", domain, to_prefix(u), nonlin.name, lhs, rhs,
                   defect, sides, cfg, time.perf_counter() - t0, note)


def sigma_boundary_sign(u: ScalarField, domain: DomainSpec,
                        cfg: QuadConfig = QuadConfig()) -> float:
    """int_sigma E (c1 x dy - c2 y dx) for u vanishing on sigma of a
    star-shaped domain.  Nonnegative whenever sigma lies in the closed
    elliptic half-plane y >= 0 (omega1, omega2) and exactly zero on the
    omega4 segment; the omega3 arc dips into y < 0 where the integrand is
    sign-indefinite, so no sign claim is made there."""
    _ensure_oriented(domain, cfg)
    _require_vanishing(u, domain, [BoundaryCurveId.SIGMA], cfg,
                       "sigma_boundary_sign")
    rep = check_starshaped(domain)
    if not rep.is_starlike:
        raise PreconditionViolated(
            f"domain is not star-shaped under the dilation flow "
            f"(min form {rep.min_form:.3e} at {rep.worst_point})")
    params, co = domain.params, coefficients(domain.params)
    c1, c2 = co.c1, co.c2

    def form(j, x, y):
        e = energy_from_jet(params, j, x, y)
        return -c2 * y * e, c1 * x * e

    return _curve_functional(u, domain, BoundaryCurveId.SIGMA, cfg, form)


# ---------------------------------------------------------------------------
# scaling ratios

@lru_cache(maxsize=64)
def _box_level(lx: float, ly: float, order: int, panels: int) -> quad.GridLevel:
    # four sign quadrants so |x|, |y| weights stay smooth per chart
    t, w = quad._panel_nodes(0.0, 1.0, order, panels)
    U, V = np.meshgrid(t, t, indexing="ij")
    W2 = np.outer(w, w)
    xs, ys, ws = [], [], []
    for sx in (-1.0, 1.0):
        for sy in (-1.0, 1.0):
            xs.append((sx * lx * U).ravel())
            ys.append((sy * ly * V).ravel())
            ws.append((lx * ly * W2).ravel())
    return quad.GridLevel(np.concatenate(xs), np.concatenate(ys),
                          np.concatenate(ws))


def _box_integral(u, lx, ly, cfg, density) -> float:
    def level(panels):
        g = _box_level(lx, ly, cfg.gauss_order, panels)
        j = u.jet(g.x, g.y)
        return float(np.sum(np.asarray(density(j, g.x, g.y), float) * g.w))

    fine = level(cfg.panels_per_axis)
    coarse = level(max(1, cfg.panels_per_axis // 2))
    return check_two_level(fine, coarse, cfg, "box integral")


def scaling_ratios(u: ScalarField, lam: float, pexp: float,
                   coeffs: Coefficients, cfg: QuadConfig = QuadConfig()) -> dict:
    """Ratios ||u_lam||_p^p / ||u||_p^p and the weighted-gradient analogue,
    integrating u over the unit box and u_lam over its dilated image (the
    exact change of variables, so the expected ratios are lam**kappa and
    lam**mu)."""
    if not (lam > 0 and math.isfinite(lam)):
        raise ValueError("lam must be positive")
    if not pexp >= 1:
        raise ValueError("pexp must be >= 1")
    from .field import dilate  # local to avoid import cycle at module load

    params = OperatorParams(coeffs.c1 - 2, coeffs.c2 - 2)
    ul = dilate(u, lam, coeffs)
    lx, ly = 1.0, 1.0
    lxd, lyd = lam ** coeffs.c1 * lx, lam ** coeffs.c2 * ly

    def lp(j, x, y):
        return np.abs(j.u) ** pexp

    def grad(j, x, y):
        return norm_from_jet(params, j, x, y)

    lp_base = _box_integral(u, lx, ly, cfg, lp)
    lp_dil = _box_integral(ul, lxd, lyd, cfg, lp)
    gr_base = _box_integral(u, lx, ly, cfg, grad)
    gr_dil = _box_integral(ul, lxd, lyd, cfg, grad)
    if lp_base == 0.0 or gr_base == 0.0:
        raise PreconditionViolated("u must not vanish identically on the box")
    return {"lp_ratio": lp_dil / lp_base, "grad_ratio": gr_dil / gr_base}


# ---------------------------------------------------------------------------
# the one-dimensional Hardy package on (y_c, 0)

@dataclass(frozen=True)
class HardyParams:
    p: float = 2.0
    q: float = 2.0
    y_c: float = -1.0

    def __post_init__(self):
        if not (1.0 < self.p <= self.q and math.isfinite(self.q)):
            raise ValueError("need 1 < p <= q < infinity")
        if not self.y_c < 0:
            raise ValueError("need y_c < 0")

    @property
    def p_conj(self) -> float:
        return self.p / (self.p - 1.0)

    @property
    def q_conj(self) -> float:
        return self.q / (self.q - 1.0)


def hardy_weight_exponents(params: OperatorParams) -> tuple[Fraction, Fraction]:
    """(e1, e2) with v(t) = (-t)^e1 weighting the derivative and
    w(t) = (-t)^e2 weighting the function."""
    m1, m2 = params.m1, params.m2
    e1 = Fraction(m1 + 2 * m2 + m1 * m2 + 2, m2 + 2)
    e2 = Fraction(m1 + m1 * m2 - 2, m2 + 2)
    return e1, e2


def _require_mu(params: OperatorParams) -> Coefficients:
    co = coefficients(params)
    if co.mu == 0:
        raise DegenerateDenominator("the Hardy package needs mu > 0")
    return co


def hardy_GL(params: OperatorParams, y_c: float, x: float) -> float:
    """Closed form of the p = q = 2 Muckenhoupt product on (y_c, 0):
    (c2/mu) * sqrt(1 - ((-x)/(-y_c))**(mu/c2))."""
    co = _require_mu(params)
    if not (y_c < x < 0):
        raise OutOfRange(f"need y_c < x < 0, got x = {x}, y_c = {y_c}")
    ratio = (-x) / (-y_c)
    return (co.c2 / co.mu) * math.sqrt(1.0 - ratio ** (co.mu / co.c2))


def hardy_GL_numeric(params: OperatorParams, pq: HardyParams, x: float,
                     cfg: QuadConfig = QuadConfig()) -> float:
    """The defining Muckenhoupt product by direct quadrature:
    (int_x^0 w dt)^(1/q) * (int_{y_c}^x v^(1-p') dt)^(1/p')."""
    _require_mu(params)
    if not (pq.y_c < x < 0):
        raise OutOfRange(f"need y_c < x < 0, got x = {x}")
    e1, e2 = (float(e) for e in hardy_weight_exponents(params))
    pc = pq.p_conj
    i_w = quad.integrate_neg_interval(lambda t: (-t) ** e2, x, cfg)

    # v^(1-p') blows up like a power toward 0; the substitution t = -exp(-s)
    # turns it into a smooth exponential that composite Gauss resolves
    def g(s):
        t = -np.exp(-s)
        return (-t) ** (e1 * (1.0 - pc)) * np.exp(-s)

    i_v = quad.integrate_interval(g, -math.log(-pq.y_c), -math.log(-x), cfg)
    return i_w ** (1.0 / pq.q) * i_v ** (1.0 / pc)


def _mucken_product_grid(params: OperatorParams, pq: HardyParams,
                         xs: np.ndarray) -> np.ndarray:
    # closed antiderivatives of the power weights, vectorized over xs
    e1, e2 = (float(e) for e in hardy_weight_exponents(params))
    pc = pq.p_conj
    a = pq.y_c
    iw = (-xs) ** (e2 + 1.0) / (e2 + 1.0)
    ve = e1 * (1.0 - pc)
    if abs(ve + 1.0) < 1e-15:
        iv = np.log((-a) / (-xs))
    else:
        iv = ((-a) ** (ve + 1.0) - (-xs) ** (ve + 1.0)) / (ve + 1.0)
    return iw ** (1.0 / pq.q) * iv ** (1.0 / pc)


def hardy_constants(params: OperatorParams, pq: HardyParams) -> dict:
    """Muckenhoupt constant M_L, the bridging factor r(p, q), and the
    two-sided bounds [M_L, r M_L] for the best constant.  For p = q = 2
    everything is an exact rational and the closed form is confirmed by a
    10^4-point grid supremum."""
    co = _require_mu(params)
    exact22 = pq.p == 2.0 and pq.q == 2.0
    if exact22:
        m_l = Fraction(co.c2, co.mu)
        r = Fraction(2)
    else:
        pc = pq.p_conj
        r = float((1.0 + pq.q / pc) ** (1.0 / pq.q)
                  * (1.0 + pc / pq.q) ** (1.0 / pc))
        m_l = None
    n = 10_000
    half = n // 2
    xs = np.concatenate([
        np.linspace(pq.y_c * (1.0 - 0.5 / half), pq.y_c / 2.0, half),
        -np.geomspace(-pq.y_c / 2.0, -pq.y_c * 1e-18, n - half),
    ])
    grid_sup = float(np.max(_mucken_product_grid(params, pq, xs)))
    if exact22:
        if abs(grid_sup - float(m_l)) > 1e-8 * max(1.0, float(m_l)):
            raise NonConvergence(
                f"grid supremum {grid_sup!r} does not reach M_L = {m_l}")
    else:
        m_l = grid_sup
    return {"M_L": m_l, "r": r, "C_L_low": m_l, "C_L_high": r * m_l,
            "grid_sup": grid_sup}


def polynomial_sample_fn(coeffs_list, a: float, b: float) -> SampleFn1D:
    """SampleFn1D from polynomial coefficients (lowest degree first)."""
    p = np.polynomial.Polynomial(list(coeffs_list))
    return SampleFn1D(p, p.deriv(), a, b)


def random_hardy_phi(y_c: float, rng) -> SampleFn1D:
    """Random polynomial vanishing at y_c (the Hardy-side requirement)."""
    base = np.polynomial.Polynomial([-y_c, 1.0])   # (t - y_c)
    p = base * np.polynomial.Polynomial(rng.uniform(-1.0, 1.0, size=4))
    return SampleFn1D(p, p.deriv(), y_c, 0.0)


def random_boundary_phi(y_c: float, rng) -> SampleFn1D:
    """Random polynomial vanishing at both ends of [y_c, 0]."""
    base = np.polynomial.Polynomial([-y_c, 1.0]) * np.polynomial.Polynomial([0.0, -1.0])
    p = base * np.polynomial.Polynomial(rng.uniform(-1.0, 1.0, size=4))
    return SampleFn1D(p, p.deriv(), y_c, 0.0)


def _phi_scale(phi: SampleFn1D) -> float:
    t = np.linspace(phi.a, phi.b, 257)
    return 1.0 + float(np.max(np.abs(np.asarray(phi.fn(t), float))))


def boundary_energy_I(params: OperatorParams, y_c: float, phi: SampleFn1D,
                      cfg: QuadConfig = QuadConfig()) -> float:
    """The boundary energy functional reduced to (y_c, 0):
    I = 2 c2 A int v (phi')^2 - (mu^2 / (2 c2)) A int w phi^2,
    with A = (c2/c1)**(m2/c2) > 0.  Nonnegative by the Hardy inequality."""
    co = _require_mu(params)
    if not y_c < 0:
        raise ValueError("need y_c < 0")
    if abs(phi.a - y_c) > 1e-12 or abs(phi.b) > 1e-12:
        raise ValueError("phi must live on [y_c, 0]")
    scale = _phi_scale(phi)
    if abs(float(phi.fn(y_c))) > 1e-12 * scale or abs(float(phi.fn(0.0))) > 1e-12 * scale:
        raise PreconditionViolated("boundary energy needs phi(y_c) = phi(0) = 0")
    e1, e2 = (float(e) for e in hardy_weight_exponents(params))
    a_fac = (co.c2 / co.c1) ** (params.m2 / co.c2)
    i1 = quad.integrate_neg_interval(
        lambda t: (-t) ** e1 * np.asarray(phi.dfn(t), float) ** 2, y_c, cfg)
    i2 = quad.integrate_neg_interval(
        lambda t: (-t) ** e2 * np.asarray(phi.fn(t), float) ** 2, y_c, cfg)
    return 2.0 * co.c2 * a_fac * i1 - (co.mu ** 2 / (2.0 * co.c2)) * a_fac * i2


def hardy_inequality_check(params: OperatorParams, pq: HardyParams,
                           phi: SampleFn1D,
                           cfg: QuadConfig = QuadConfig()) -> Residual:
    """[int w phi^2]^(1/2) <= C_L [int v (phi')^2]^(1/2) with C_L = 2 c2/mu,
    for phi vanishing at y_c.  Returns Residual(lhs, rhs); the inequality
    holds when lhs <= rhs."""
    co = _require_mu(params)
    if not (pq.p == 2.0 and pq.q == 2.0):
        raise ValueError("the closed-form constant is the p = q = 2 case")
    if abs(phi.a - pq.y_c) > 1e-12:
        raise ValueError("phi must live on [y_c, 0]")
    scale = _phi_scale(phi)
    if abs(float(phi.fn(pq.y_c))) > 1e-12 * scale:
        raise PreconditionViolated("the Hardy inequality needs phi(y_c) = 0")
    e1, e2 = (float(e) for e in hardy_weight_exponents(params))
    lhs = math.sqrt(quad.integrate_neg_interval(
        lambda t: (-t) ** e2 * np.asarray(phi.fn(t), float) ** 2, pq.y_c, cfg))
    rhs = (2.0 * co.c2 / co.mu) * math.sqrt(quad.integrate_neg_interval(
        lambda t: (-t) ** e1 * np.asarray(phi.dfn(t), float) ** 2, pq.y_c, cfg))
    return Residual(lhs, rhs)


def equivalence_chain(params: OperatorParams) -> bool:
    """Exact rational chain M_L <= 2 c2/mu <= 2 M_L, with the right-hand
    comparison an equality."""
    co = _require_mu(params)
    m_l = Fraction(co.c2, co.mu)
    c_l = Fraction(2 * co.c2, co.mu)
    return m_l <= c_l <= 2 * m_l and c_l == 2 * m_l
