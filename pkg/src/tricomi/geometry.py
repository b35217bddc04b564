"""Domain geometry for the operator -y^m1 uxx - x^m2 uyy.

Four bounded domain variants, each enclosed by two characteristic curves
(AC and BC, meeting at an apex C) plus an arc sigma on the far side of
the degeneracy line.  Anchors: omega1/omega2 use x0 with A = (2*x0, 0)
and B = (0, 0); omega3/omega4 use y0 with A = (0, 2*y0) and B = (0, 0).

Boundary orientation is counterclockwise (interior on the left) with
outward normal density eta ds = (dy, -dx).  The convention is validated
empirically by the quadrature module's divergence self-test.

Fractional powers of negative coordinates use the odd-root convention
x**(p/q) := sign(x)**p * |x|**(p/q), invoked only where the parity
hypotheses make q odd.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field as dc_field
from enum import Enum
from typing import Callable

import numpy as np

from .errors import CornerPoint, DomainError, OutOfRange
from .params import Coefficients, OperatorParams, coefficients, require_admissible

__all__ = [
    "Variant",
    "BoundaryCurveId",
    "Point",
    "Vec2",
    "EllipticArc",
    "ParametricArc",
    "DomainSpec",
    "StarlikeReport",
    "CurveChart",
    "AreaChart",
    "omega1",
    "omega2",
    "omega3",
    "omega4",
    "default_arc",
    "endpoints",
    "apex",
    "curve_point",
    "natural_range",
    "outward_normal",
    "flow",
    "starlike_form",
    "check_starshaped",
    "char_ode_residual",
    "char_ode_residual_at",
    "contains",
    "boundary_charts",
    "area_charts",
    "boundary_csv",
    "boundary_svg",
]


class Variant(Enum):
    OMEGA1 = "omega1"
    OMEGA2 = "omega2"
    OMEGA3 = "omega3"
    OMEGA4 = "omega4"


class BoundaryCurveId(Enum):
    AC = "AC"
    BC = "BC"
    SIGMA = "sigma"


@dataclass(frozen=True)
class Point:
    x: float
    y: float

    def __post_init__(self):
        if not (math.isfinite(self.x) and math.isfinite(self.y)):
            raise ValueError(f"point components must be finite, got {self!r}")


@dataclass(frozen=True)
class Vec2:
    x: float
    y: float

    def __post_init__(self):
        if not (math.isfinite(self.x) and math.isfinite(self.y)):
            raise ValueError(f"vector components must be finite, got {self!r}")


@dataclass(frozen=True)
class EllipticArc:
    """Half of the ellipse centered on the chord AB, on the far side of
    the degeneracy line from the domain interior."""

    center: Point
    semi_axes: tuple[float, float]

    def __post_init__(self):
        a, b = self.semi_axes
        if not (a > 0 and b > 0):
            raise ValueError(f"semi-axes must be positive, got {self.semi_axes}")


@dataclass(frozen=True, eq=False)
class ParametricArc:
    """User-supplied arc t in [t_lo, t_hi] -> (x, y), traversed in the
    variant's positive sigma direction.  dfn is the derivative; a central
    difference is used when absent."""

    fn: Callable
    t_lo: float
    t_hi: float
    dfn: Callable | None = None

    def __post_init__(self):
        if not self.t_hi > self.t_lo:
            raise ValueError("need t_hi > t_lo")

    def deriv(self, t):
        if self.dfn is not None:
            return self.dfn(t)
        h = 1e-6 * (self.t_hi - self.t_lo)
        xp, yp = self.fn(t + h)
        xm, ym = self.fn(t - h)
        return (np.asarray(xp) - xm) / (2 * h), (np.asarray(yp) - ym) / (2 * h)


def _odd_root(v, k: int):
    # real k-th root for odd k, sign-preserving
    v = np.asarray(v, dtype=float)
    return np.sign(v) * np.abs(v) ** (1.0 / k)


def _quiet(fn):
    # chart derivatives can hit 0**negative exactly at corner parameters;
    # callers never use those values (CornerPoint is raised first)
    def wrapped(*args):
        with np.errstate(divide="ignore", invalid="ignore", over="ignore"):
            return fn(*args)

    return wrapped


def _apex_closed_form(variant: Variant, params: OperatorParams, anchor: float) -> Point:
    co = coefficients(params)
    c1, c2 = co.c1, co.c2
    k = (params.m2 + 2) // 2
    if variant in (Variant.OMEGA1, Variant.OMEGA2):
        x0 = anchor
        xc = 0.5 ** (2.0 / c2) * (2.0 * x0)
        yc = -((0.5 * c1 / c2) * abs(2.0 * x0) ** k) ** (2.0 / c1)
        return Point(xc, yc)
    y0 = anchor
    bigk = (-2.0 * y0) ** (c1 / 2.0)
    xc = ((0.5 * c2 / c1) * bigk) ** (2.0 / c2)
    yc = 0.5 ** (2.0 / c1) * (2.0 * y0)
    return Point(xc, yc)


def default_arc(variant: Variant, anchor: float) -> EllipticArc | None:
    if variant is Variant.OMEGA4:
        return None
    if variant in (Variant.OMEGA1, Variant.OMEGA2):
        return EllipticArc(Point(anchor, 0.0), (abs(anchor), abs(anchor)))
    return EllipticArc(Point(0.0, anchor), (abs(anchor), abs(anchor)))


@dataclass(frozen=True)
class DomainSpec:
    variant: Variant
    params: OperatorParams
    anchor: float
    arc: EllipticArc | ParametricArc | None = None
    _apex: Point = dc_field(init=False, repr=False, compare=False)

    def __post_init__(self):
        require_admissible(self.params, self.variant.value)
        v = self.variant
        if v is Variant.OMEGA1 and not self.anchor < 0:
            raise DomainError("omega1 needs x0 < 0")
        if v is Variant.OMEGA2 and not self.anchor > 0:
            raise DomainError("omega2 needs x0 > 0")
        if v in (Variant.OMEGA3, Variant.OMEGA4) and not self.anchor < 0:
            raise DomainError(f"{v.value} needs y0 < 0")
        if v is Variant.OMEGA4:
            if self.arc is not None:
                raise DomainError("omega4's sigma is the segment x = 0; no arc")
        elif self.arc is None:
            object.__setattr__(self, "arc", default_arc(v, self.anchor))
        self._validate_arc()
        object.__setattr__(self, "_apex", _apex_closed_form(v, self.params, self.anchor))

    def _validate_arc(self):
        if self.arc is None:
            return
        a_pt, b_pt = endpoints(self)
        start, end = _sigma_traversal(self.variant, a_pt, b_pt)
        if isinstance(self.arc, EllipticArc):
            sa, sb = self.semi_minor_endpoint_check()
            for got, want in ((sa, start), (sb, end)):
                if abs(got[0] - want.x) > 1e-14 or abs(got[1] - want.y) > 1e-14:
                    raise DomainError(
                        f"elliptic arc endpoints {sa}, {sb} must hit "
                        f"{start} and {end}")
        else:
            sa = self.arc.fn(self.arc.t_lo)
            sb = self.arc.fn(self.arc.t_hi)
            for got, want in ((sa, start), (sb, end)):
                if abs(float(got[0]) - want.x) > 1e-9 or abs(float(got[1]) - want.y) > 1e-9:
                    raise DomainError(
                        f"parametric arc endpoints {sa}, {sb} must hit "
                        f"{start} and {end} (positive sigma traversal)")

    def semi_minor_endpoint_check(self):
        # the half-ellipse's own endpoints in positive traversal order
        cx, cy = self.arc.center.x, self.arc.center.y
        a, _ = self.arc.semi_axes
        if self.variant is Variant.OMEGA1:
            return (cx + a, cy), (cx - a, cy)   # B then A
        if self.variant is Variant.OMEGA2:
            return (cx + a, cy), (cx - a, cy)   # A' then B'
        b = self.arc.semi_axes[1]
        return (cx, cy + b), (cx, cy - b)       # B'' then A''

    @property
    def apex(self) -> Point:
        fresh = _apex_closed_form(self.variant, self.params, self.anchor)
        if abs(fresh.x - self._apex.x) > 1e-14 or abs(fresh.y - self._apex.y) > 1e-14:
            raise DomainError("cached apex no longer matches its closed form")
        return self._apex


def omega1(m1: int, m2: int, x0: float, arc=None) -> DomainSpec:
    return DomainSpec(Variant.OMEGA1, OperatorParams(m1, m2), x0, arc)


def omega2(m1: int, m2: int, x0: float, arc=None) -> DomainSpec:
    return DomainSpec(Variant.OMEGA2, OperatorParams(m1, m2), x0, arc)


def omega3(m1: int, m2: int, y0: float, arc=None) -> DomainSpec:
    return DomainSpec(Variant.OMEGA3, OperatorParams(m1, m2), y0, arc)


def omega4(m1: int, m2: int, y0: float) -> DomainSpec:
    return DomainSpec(Variant.OMEGA4, OperatorParams(m1, m2), y0, None)


def endpoints(domain: DomainSpec) -> tuple[Point, Point]:
    """The parabolic boundary points (A, B)."""
    if domain.variant in (Variant.OMEGA1, Variant.OMEGA2):
        return Point(2.0 * domain.anchor, 0.0), Point(0.0, 0.0)
    return Point(0.0, 2.0 * domain.anchor), Point(0.0, 0.0)


def _sigma_traversal(variant: Variant, a_pt: Point, b_pt: Point) -> tuple[Point, Point]:
    # (start, end) of sigma in the positive boundary loop
    if variant is Variant.OMEGA1:
        return b_pt, a_pt
    if variant is Variant.OMEGA2:
        return a_pt, b_pt
    return b_pt, a_pt


def apex(domain: DomainSpec) -> Point:
    return domain.apex


def flow(p: Point, t: float, coeffs: Coefficients) -> Point:
    """Anisotropic dilation flow of D = -c1 x d/dx - c2 y d/dy."""
    return Point(p.x * math.exp(-coeffs.c1 * t), p.y * math.exp(-coeffs.c2 * t))


def starlike_form(p: Point, dp: Vec2, coeffs: Coefficients) -> float:
    """c1*x*dy - c2*y*dx for a positively oriented tangent differential dp."""
    return coeffs.c1 * p.x * dp.y - coeffs.c2 * p.y * dp.x


# ---------------------------------------------------------------------------
# per-variant constants and charts

class _Geo:
    """Closed-form curve data for one domain."""

    def __init__(self, domain: DomainSpec):
        self.domain = domain
        self.params = domain.params
        self.co = coefficients(domain.params)
        self.c1, self.c2 = self.co.c1, self.co.c2
        self.k = (domain.params.m2 + 2) // 2
        self.rho = self.c2 / self.c1            # (m2+2)/(m1+2)
        self.apex = domain.apex
        v = domain.variant
        if v in (Variant.OMEGA1, Variant.OMEGA2):
            self.two_x0_k = (2.0 * domain.anchor) ** self.k
            # graded parameter scale: y = -tau^(2k) with tau in [0, T]
            self.T = (-self.apex.y) ** (1.0 / (2 * self.k))
            self.bc_coef = self.rho ** (1.0 / self.k)
        else:
            self.bigk = (-2.0 * domain.anchor) ** (self.c1 / 2.0)
            self.S = self.apex.x ** (1.0 / self.c1)   # x = s^c1 on BC''
            self.bc_ycoef = (1.0 / self.rho) ** (2.0 / self.c1)

    # --- natural-parameter curves -----------------------------------------

    def ac_xy(self, s):
        v = self.domain.variant
        if v is Variant.OMEGA1:
            g = self.two_x0_k + self.rho * (-np.asarray(s, float)) ** (self.c1 / 2.0)
            return _odd_root(g, self.k), np.asarray(s, float)
        if v is Variant.OMEGA2:
            g = self.two_x0_k - self.rho * (-np.asarray(s, float)) ** (self.c1 / 2.0)
            return g ** (1.0 / self.k), np.asarray(s, float)
        x = np.asarray(s, float)
        base = self.bigk - (1.0 / self.rho) * x ** self.k
        return x, -(base ** (2.0 / self.c1))

    def bc_xy(self, s):
        v = self.domain.variant
        if v is Variant.OMEGA1:
            g = -self.rho * (-np.asarray(s, float)) ** (self.c1 / 2.0)
            return _odd_root(g, self.k), np.asarray(s, float)
        if v is Variant.OMEGA2:
            g = self.rho * (-np.asarray(s, float)) ** (self.c1 / 2.0)
            return g ** (1.0 / self.k), np.asarray(s, float)
        x = np.asarray(s, float)
        return x, -self.bc_ycoef * x ** (2.0 * self.k / self.c1)

    @_quiet
    def ac_dxy(self, s):
        # derivative wrt the natural parameter (y for omega1/2, x for omega3/4)
        v = self.domain.variant
        m1 = self.params.m1
        if v is Variant.OMEGA1:
            y = np.asarray(s, float)
            g = self.two_x0_k + self.rho * (-y) ** (self.c1 / 2.0)
            dx = -np.abs(g) ** (1.0 / self.k - 1.0) * (-y) ** (m1 / 2.0)
            return dx, np.ones_like(y)
        if v is Variant.OMEGA2:
            y = np.asarray(s, float)
            g = self.two_x0_k - self.rho * (-y) ** (self.c1 / 2.0)
            dx = g ** (1.0 / self.k - 1.0) * (-y) ** (m1 / 2.0)
            return dx, np.ones_like(y)
        x = np.asarray(s, float)
        base = self.bigk - (1.0 / self.rho) * x ** self.k
        dy = x ** (self.k - 1) * base ** (2.0 / self.c1 - 1.0)
        return np.ones_like(x), dy

    @_quiet
    def bc_dxy(self, s):
        v = self.domain.variant
        m1 = self.params.m1
        if v is Variant.OMEGA1:
            y = np.asarray(s, float)
            g = -self.rho * (-y) ** (self.c1 / 2.0)
            dx = np.abs(g) ** (1.0 / self.k - 1.0) * (-y) ** (m1 / 2.0)
            return dx, np.ones_like(y)
        if v is Variant.OMEGA2:
            y = np.asarray(s, float)
            g = self.rho * (-y) ** (self.c1 / 2.0)
            dx = -(g ** (1.0 / self.k - 1.0)) * (-y) ** (m1 / 2.0)
            return dx, np.ones_like(y)
        x = np.asarray(s, float)
        p = 2.0 * self.k / self.c1
        dy = -self.bc_ycoef * p * x ** (p - 1.0)
        return np.ones_like(x), dy

    def sigma_xy(self, s):
        arc = self.domain.arc
        v = self.domain.variant
        s = np.asarray(s, float)
        if v is Variant.OMEGA4:
            return np.zeros_like(s), -s
        if isinstance(arc, ParametricArc):
            x, y = arc.fn(s)
            return np.asarray(x, float), np.asarray(y, float)
        cx, cy = arc.center.x, arc.center.y
        a, b = arc.semi_axes
        return cx + a * np.cos(s), cy + b * np.sin(s)

    def sigma_dxy(self, s):
        arc = self.domain.arc
        v = self.domain.variant
        s = np.asarray(s, float)
        if v is Variant.OMEGA4:
            return np.zeros_like(s), -np.ones_like(s)
        if isinstance(arc, ParametricArc):
            dx, dy = arc.deriv(s)
            return np.asarray(dx, float), np.asarray(dy, float)
        a, b = arc.semi_axes
        return -a * np.sin(s), b * np.cos(s)


def _geo(domain: DomainSpec) -> _Geo:
    return _Geo(domain)


def natural_range(domain: DomainSpec, curve: BoundaryCurveId) -> tuple[float, float]:
    """Natural parameter interval: y in [y_c, 0] (omega1/2 characteristics),
    x in [0, x_c] (omega3/4), the arc parameter for sigma."""
    v = domain.variant
    if curve is BoundaryCurveId.SIGMA:
        if v is Variant.OMEGA4:
            return 0.0, -2.0 * domain.anchor
        if isinstance(domain.arc, ParametricArc):
            return domain.arc.t_lo, domain.arc.t_hi
        if v is Variant.OMEGA3:
            return math.pi / 2.0, 3.0 * math.pi / 2.0
        return 0.0, math.pi
    if v in (Variant.OMEGA1, Variant.OMEGA2):
        return domain.apex.y, 0.0
    return 0.0, domain.apex.x


# natural parameter runs along (+1) or against (-1) the positive loop
_ORIENT = {
    Variant.OMEGA1: {BoundaryCurveId.AC: -1, BoundaryCurveId.BC: +1, BoundaryCurveId.SIGMA: +1},
    Variant.OMEGA2: {BoundaryCurveId.AC: +1, BoundaryCurveId.BC: -1, BoundaryCurveId.SIGMA: +1},
    Variant.OMEGA3: {BoundaryCurveId.AC: +1, BoundaryCurveId.BC: -1, BoundaryCurveId.SIGMA: +1},
    Variant.OMEGA4: {BoundaryCurveId.AC: +1, BoundaryCurveId.BC: -1, BoundaryCurveId.SIGMA: +1},
}


def _curve_fns(geo: _Geo, curve: BoundaryCurveId):
    if curve is BoundaryCurveId.AC:
        return geo.ac_xy, geo.ac_dxy
    if curve is BoundaryCurveId.BC:
        return geo.bc_xy, geo.bc_dxy
    return geo.sigma_xy, geo.sigma_dxy


def curve_point(domain: DomainSpec, curve: BoundaryCurveId, s: float) -> Point:
    lo, hi = natural_range(domain, curve)
    slack = 1e-12 * max(1.0, hi - lo)
    if s < lo - slack or s > hi + slack:
        raise OutOfRange(f"parameter {s} outside [{lo}, {hi}] for {curve.value}")
    s = min(max(s, lo), hi)
    xy, _ = _curve_fns(_Geo(domain), curve)
    x, y = xy(s)
    return Point(float(x), float(y))


def outward_normal(domain: DomainSpec, curve: BoundaryCurveId, s: float) -> Vec2:
    lo, hi = natural_range(domain, curve)
    slack = 1e-12 * max(1.0, hi - lo)
    if s < lo - slack or s > hi + slack:
        raise OutOfRange(f"parameter {s} outside [{lo}, {hi}] for {curve.value}")
    eps = 1e-13 * max(1.0, hi - lo)
    if s - lo <= eps or hi - s <= eps:
        raise CornerPoint(f"normal undefined at corner parameter {s} of {curve.value}")
    geo = _Geo(domain)
    _, dxy = _curve_fns(geo, curve)
    dx, dy = dxy(s)
    orient = _ORIENT[domain.variant][curve]
    tx, ty = orient * float(dx), orient * float(dy)
    nx, ny = ty, -tx
    nrm = math.hypot(nx, ny)
    if nrm == 0.0 or not math.isfinite(nrm):
        raise CornerPoint(f"degenerate tangent at parameter {s} of {curve.value}")
    return Vec2(nx / nrm, ny / nrm)


def char_ode_residual_at(params: OperatorParams, variant: Variant,
                         x: float, y: float, slope: float) -> float:
    """Characteristic ODE residual at a point.  slope is dy/dx for
    omega1/omega2 (checks -y^m1 (y')^2 = x^m2) and dx/dy for omega3/omega4
    (checks -y^m1 = x^m2 (x')^2)."""
    if variant in (Variant.OMEGA1, Variant.OMEGA2):
        return -(y ** params.m1) * slope * slope - x ** params.m2
    return -(y ** params.m1) - x ** params.m2 * slope * slope


def char_ode_residual(domain: DomainSpec, curve: BoundaryCurveId, s: float) -> float:
    if curve is BoundaryCurveId.SIGMA:
        raise DomainError("the ODE residual is defined on characteristics only")
    lo, hi = natural_range(domain, curve)
    eps = 1e-13 * max(1.0, hi - lo)
    if s < lo - eps or s > hi + eps:
        raise OutOfRange(f"parameter {s} outside [{lo}, {hi}] for {curve.value}")
    if s - lo <= eps or hi - s <= eps:
        raise CornerPoint(f"ODE residual undefined at corner parameter {s}")
    geo = _Geo(domain)
    xy, dxy = _curve_fns(geo, curve)
    x, y = xy(s)
    dx, dy = dxy(s)
    if domain.variant in (Variant.OMEGA1, Variant.OMEGA2):
        slope = float(dy) / float(dx)        # dy/dx; natural parameter is y
        return char_ode_residual_at(domain.params, domain.variant, float(x), float(y), slope)
    slope = float(dx) / float(dy)            # dx/dy; natural parameter is x
    return char_ode_residual_at(domain.params, domain.variant, float(x), float(y), slope)


# ---------------------------------------------------------------------------
# charts for quadrature (positively oriented, optionally graded)

@dataclass
class CurveChart:
    curve: BoundaryCurveId
    name: str
    lo: float
    hi: float
    fn: Callable  # vectorized tau -> (x, y, dx/dtau, dy/dtau)


@dataclass
class AreaChart:
    name: str
    fn: Callable  # vectorized (U, V) in [0,1]^2 -> (X, Y, jacobian >= 0)


def _graded_curve_charts(domain: DomainSpec) -> list[CurveChart]:
    geo = _Geo(domain)
    c1, c2, k = geo.c1, geo.c2, geo.k
    v = domain.variant
    charts: list[CurveChart] = []

    if v in (Variant.OMEGA1, Variant.OMEGA2):
        T = geo.T
        two_x0_k = geo.two_x0_k
        rho = geo.rho
        bc_coef = geo.bc_coef

        if v is Variant.OMEGA1:
            # AC traversed A -> C: y = -tau^(2k)
            def ac(tau):
                tau = np.asarray(tau, float)
                y = -(tau ** (2 * k))
                dy = -2.0 * k * tau ** (2 * k - 1)
                g = two_x0_k + rho * tau ** (k * c1)
                x = _odd_root(g, k)
                dx = c2 * np.abs(g) ** (1.0 / k - 1.0) * tau ** (k * c1 - 1)
                return x, y, dx, dy

            # BC traversed C -> B: x = -bc_coef*w^c1, y = -w^(2k), w = T - tau
            def bc(tau):
                w = T - np.asarray(tau, float)
                x = -bc_coef * w ** c1
                y = -(w ** (2 * k))
                dx = c1 * bc_coef * w ** (c1 - 1)
                dy = 2.0 * k * w ** (2 * k - 1)
                return x, y, dx, dy
        else:
            # omega2: BC' traversed B' -> C', AC' traversed C' -> A'
            def bc(tau):
                tau = np.asarray(tau, float)
                x = bc_coef * tau ** c1
                y = -(tau ** (2 * k))
                dx = c1 * bc_coef * tau ** (c1 - 1)
                dy = -2.0 * k * tau ** (2 * k - 1)
                return x, y, dx, dy

            def ac(tau):
                w = T - np.asarray(tau, float)
                y = -(w ** (2 * k))
                dy = 2.0 * k * w ** (2 * k - 1)
                g = two_x0_k - rho * w ** (k * c1)
                x = g ** (1.0 / k)
                dx = c2 * g ** (1.0 / k - 1.0) * w ** (k * c1 - 1)
                return x, y, dx, dy

        def sig(theta):
            x, y = geo.sigma_xy(theta)
            dx, dy = geo.sigma_dxy(theta)
            return x, y, dx, dy

        lo, hi = natural_range(domain, BoundaryCurveId.SIGMA)
        charts.append(CurveChart(BoundaryCurveId.AC, "AC", 0.0, T, _quiet(ac)))
        charts.append(CurveChart(BoundaryCurveId.BC, "BC", 0.0, T, _quiet(bc)))
        charts.append(CurveChart(BoundaryCurveId.SIGMA, "sigma", lo, hi, sig))
        return charts

    # omega3 / omega4
    S = geo.S
    bigk = geo.bigk
    bc_ycoef = geo.bc_ycoef

    # AC'' traversed A'' -> C'' in its natural parameter x (analytic, no grading)
    def ac(x):
        x = np.asarray(x, float)
        base = bigk - (1.0 / geo.rho) * x ** k
        y = -(base ** (2.0 / c1))
        dy = x ** (k - 1) * base ** (2.0 / c1 - 1.0)
        return x, y, np.ones_like(x), dy

    # BC'' traversed C'' -> B'': x = w^c1, w = S - tau
    def bc(tau):
        w = S - np.asarray(tau, float)
        x = w ** c1
        y = -bc_ycoef * w ** (2 * k)
        dx = -c1 * w ** (c1 - 1)
        dy = 2.0 * k * bc_ycoef * w ** (2 * k - 1)
        return x, y, dx, dy

    def sig(t):
        x, y = geo.sigma_xy(t)
        dx, dy = geo.sigma_dxy(t)
        return x, y, dx, dy

    lo, hi = natural_range(domain, BoundaryCurveId.SIGMA)
    charts.append(CurveChart(BoundaryCurveId.AC, "AC", 0.0, domain.apex.x, _quiet(ac)))
    charts.append(CurveChart(BoundaryCurveId.BC, "BC", 0.0, S, _quiet(bc)))
    charts.append(CurveChart(BoundaryCurveId.SIGMA, "sigma", lo, hi, sig))
    return charts


def _natural_curve_charts(domain: DomainSpec) -> list[CurveChart]:
    geo = _Geo(domain)
    charts = []
    for curve, name in ((BoundaryCurveId.AC, "AC"), (BoundaryCurveId.BC, "BC"),
                        (BoundaryCurveId.SIGMA, "sigma")):
        lo, hi = natural_range(domain, curve)
        xy, dxy = _curve_fns(geo, curve)
        orient = _ORIENT[domain.variant][curve]

        def fn(tau, xy=xy, dxy=dxy, orient=orient, lo=lo, hi=hi):
            s = np.asarray(tau, float) if orient > 0 else lo + hi - np.asarray(tau, float)
            x, y = xy(s)
            dx, dy = dxy(s)
            return x, y, orient * dx, orient * dy

        charts.append(CurveChart(curve, name, lo, hi, _quiet(fn)))
    return charts


def boundary_charts(domain: DomainSpec, graded: bool = True) -> list[CurveChart]:
    """Positively oriented charts for the three boundary pieces.  Graded
    charts substitute away the half-integer powers so smooth integrands
    stay smooth in the chart parameter."""
    if graded:
        return _graded_curve_charts(domain)
    return _natural_curve_charts(domain)


def area_charts(domain: DomainSpec) -> list[AreaChart]:
    """Maps from the unit square covering the domain: the characteristic
    triangle (graded slices along the natural axis) and the cap behind
    the degeneracy line (polar map), integrated separately."""
    geo = _Geo(domain)
    c1, c2, k = geo.c1, geo.c2, geo.k
    v = domain.variant
    charts: list[AreaChart] = []

    if v in (Variant.OMEGA1, Variant.OMEGA2):
        T = geo.T
        two_x0_k = geo.two_x0_k
        rho = geo.rho
        bc_coef = geo.bc_coef

        def tri(U, V):
            s = T * np.asarray(V, float)
            y = -(s ** (2 * k))
            dyds = 2.0 * k * s ** (2 * k - 1) * T
            g_ac = two_x0_k + rho * s ** (k * c1) if v is Variant.OMEGA1 \
                else two_x0_k - rho * s ** (k * c1)
            if v is Variant.OMEGA1:
                xl = _odd_root(g_ac, k)
                xr = -bc_coef * s ** c1
            else:
                xl = bc_coef * s ** c1
                xr = g_ac ** (1.0 / k)
            X = xl + np.asarray(U, float) * (xr - xl)
            J = (xr - xl) * dyds
            return X, np.broadcast_to(y, X.shape).copy(), np.broadcast_to(J, X.shape).copy()

        charts.append(AreaChart("triangle", tri))
        if isinstance(domain.arc, EllipticArc):
            cx, cy = domain.arc.center.x, domain.arc.center.y
            a, b = domain.arc.semi_axes

            def cap(U, V):
                r = np.asarray(U, float)
                th = math.pi * np.asarray(V, float)
                X = cx + a * r * np.cos(th)
                Y = cy + b * r * np.sin(th)
                J = a * b * r * math.pi
                return X, Y, np.broadcast_to(J, X.shape).copy()

            charts.append(AreaChart("cap", cap))
        else:
            charts.append(_fan_cap_chart(domain))
        return charts

    S = geo.S
    bigk = geo.bigk
    bc_ycoef = geo.bc_ycoef

    def tri(U, V):
        s = S * np.asarray(V, float)
        x = s ** c1
        dxds = c1 * s ** (c1 - 1) * S
        base = bigk - (1.0 / geo.rho) * s ** (k * c1)
        yl = -(base ** (2.0 / c1))       # AC'' below
        yu = -bc_ycoef * s ** (2 * k)    # BC'' above
        Y = yl + np.asarray(U, float) * (yu - yl)
        J = (yu - yl) * dxds
        return np.broadcast_to(x, Y.shape).copy(), Y, np.broadcast_to(J, Y.shape).copy()

    charts.append(AreaChart("triangle", tri))
    if v is Variant.OMEGA3:
        if isinstance(domain.arc, EllipticArc):
            cx, cy = domain.arc.center.x, domain.arc.center.y
            a, b = domain.arc.semi_axes

            def cap(U, V):
                r = np.asarray(U, float)
                ph = math.pi / 2.0 + math.pi * np.asarray(V, float)
                X = cx + a * r * np.cos(ph)
                Y = cy + b * r * np.sin(ph)
                J = a * b * r * math.pi
                return X, Y, np.broadcast_to(J, X.shape).copy()

            charts.append(AreaChart("cap", cap))
        else:
            charts.append(_fan_cap_chart(domain))
    return charts


def _fan_cap_chart(domain: DomainSpec) -> AreaChart:
    # generic cap behind the chord AB for a user parametric arc: fan from
    # the chord midpoint (adequate for arcs that stay star-shaped wrt it)
    arc = domain.arc
    a_pt, b_pt = endpoints(domain)
    mx, my = 0.5 * (a_pt.x + b_pt.x), 0.5 * (a_pt.y + b_pt.y)
    lo, hi = arc.t_lo, arc.t_hi

    def cap(U, V):
        t = lo + (hi - lo) * np.asarray(V, float)
        px, py = arc.fn(t)
        dpx, dpy = arc.deriv(t)
        U = np.asarray(U, float)
        X = mx + U * (np.asarray(px, float) - mx)
        Y = my + U * (np.asarray(py, float) - my)
        J = np.abs(U * ((px - mx) * dpy - (py - my) * dpx) * (hi - lo))
        return X, Y, J

    return AreaChart("cap", cap)


# ---------------------------------------------------------------------------
# membership, star-shapedness

def contains(domain: DomainSpec, p: Point, tol: float = 1e-9) -> bool:
    """Closed-domain membership with absolute slack tol."""
    geo = _Geo(domain)
    x, y = p.x, p.y
    v = domain.variant
    if v in (Variant.OMEGA1, Variant.OMEGA2):
        yc = domain.apex.y
        if yc - tol <= y <= tol:
            yy = min(max(y, yc), 0.0)
            xa, _ = geo.ac_xy(yy)
            xb, _ = geo.bc_xy(yy)
            if v is Variant.OMEGA1:
                lo_x, hi_x = float(xa), float(xb)
            else:
                lo_x, hi_x = float(xb), float(xa)
            if lo_x - tol <= x <= hi_x + tol:
                return True
        if y >= -tol:
            return _cap_contains(domain, p, tol)
        return False
    xc = domain.apex.x
    if -tol <= x <= xc + tol:
        xx = min(max(x, 0.0), xc)
        _, ya = geo.ac_xy(xx)
        _, yb = geo.bc_xy(xx)
        if float(ya) - tol <= y <= float(yb) + tol:
            return True
    if v is Variant.OMEGA3 and x <= tol:
        return _cap_contains(domain, p, tol)
    return False


def _cap_contains(domain: DomainSpec, p: Point, tol: float) -> bool:
    arc = domain.arc
    if arc is None:
        return False
    if isinstance(arc, EllipticArc):
        a, b = arc.semi_axes
        u = (p.x - arc.center.x) / a
        w = (p.y - arc.center.y) / b
        side_ok = p.y >= -tol if domain.variant in (Variant.OMEGA1, Variant.OMEGA2) \
            else p.x <= tol
        return side_ok and u * u + w * w <= 1.0 + tol / min(a, b)
    # parametric arc: ray-cast against the sampled cap polygon (arc + chord)
    n = 256
    t = np.linspace(arc.t_lo, arc.t_hi, n)
    px, py = arc.fn(t)
    xs = np.asarray(px, float)
    ys = np.asarray(py, float)
    xs = np.append(xs, xs[0])
    ys = np.append(ys, ys[0])
    inside = False
    x, y = p.x, p.y
    for i in range(len(xs) - 1):
        x1, y1, x2, y2 = xs[i], ys[i], xs[i + 1], ys[i + 1]
        if (y1 > y) != (y2 > y):
            xint = x1 + (y - y1) * (x2 - x1) / (y2 - y1)
            if x < xint:
                inside = not inside
    if inside:
        return True
    # accept points within tol of the polygon edges
    ex, ey = np.diff(xs), np.diff(ys)
    wx, wy = x - xs[:-1], y - ys[:-1]
    L2 = ex * ex + ey * ey
    tproj = np.clip((wx * ex + wy * ey) / np.where(L2 == 0, 1.0, L2), 0.0, 1.0)
    d2 = (wx - tproj * ex) ** 2 + (wy - tproj * ey) ** 2
    return bool(np.min(d2) <= tol * tol)


@dataclass(frozen=True)
class StarlikeReport:
    min_form: float
    is_starlike: bool
    worst_point: Point
    flow_contained: bool = True


def check_starshaped(domain: DomainSpec, n_samples: int = 256,
                     tol: float = 1e-9) -> StarlikeReport:
    """Sample c1*x*dy - c2*y*dx along the positively oriented boundary and
    flow boundary points forward, checking containment."""
    if n_samples < 8:
        raise ValueError("need n_samples >= 8")
    co = coefficients(domain.params)
    worst = math.inf
    worst_pt = domain.apex
    for chart in boundary_charts(domain, graded=True):
        tau = chart.lo + (chart.hi - chart.lo) * (np.arange(n_samples) + 0.5) / n_samples
        x, y, dx, dy = chart.fn(tau)
        form = co.c1 * np.asarray(x) * np.asarray(dy) - co.c2 * np.asarray(y) * np.asarray(dx)
        i = int(np.argmin(form))
        if form[i] < worst:
            worst = float(form[i])
            worst_pt = Point(float(np.asarray(x).ravel()[i]), float(np.asarray(y).ravel()[i]))
    contained = True
    m = max(8, n_samples // 8)
    for chart in boundary_charts(domain, graded=True):
        tau = chart.lo + (chart.hi - chart.lo) * (np.arange(m) + 0.5) / m
        x, y, _, _ = chart.fn(tau)
        for xi, yi in zip(np.asarray(x).ravel(), np.asarray(y).ravel()):
            for t in (0.3, 0.9, 1.8, 3.0):
                q = flow(Point(float(xi), float(yi)), t, co)
                if not contains(domain, q, tol=1e-7):
                    contained = False
                    break
            if not contained:
                break
        if not contained:
            break
    ok = worst >= -tol and contained
    return StarlikeReport(min_form=worst, is_starlike=ok,
                          worst_point=worst_pt, flow_contained=contained)


# ---------------------------------------------------------------------------
# export

def boundary_csv(domain: DomainSpec, samples_per_piece: int = 200) -> str:
    """CSV boundary sample table with header piece,s,x,y (natural parameters)."""
    lines = ["piece,s,x,y"]
    geo = _Geo(domain)
    for curve, name in ((BoundaryCurveId.AC, "AC"), (BoundaryCurveId.BC, "BC"),
                        (BoundaryCurveId.SIGMA, "sigma")):
        lo, hi = natural_range(domain, curve)
        s = np.linspace(lo, hi, samples_per_piece)
        xy, _ = _curve_fns(geo, curve)
        x, y = xy(s)
        x = np.broadcast_to(np.asarray(x, float), s.shape)
        y = np.broadcast_to(np.asarray(y, float), s.shape)
        for si, xi, yi in zip(s, x, y):
            lines.append(f"{name},{si:.17g},{xi:.17g},{yi:.17g}")
    return "\n".join(lines) + "\n"


def boundary_svg(domain: DomainSpec, samples_per_piece: int = 200) -> str:
    """SVG document with one path per boundary piece, y flipped for display."""
    geo = _Geo(domain)
    paths = []
    all_x, all_y = [], []
    colors = {"AC": "#b03030", "BC": "#3060b0", "sigma": "#308040"}
    for curve, name in ((BoundaryCurveId.AC, "AC"), (BoundaryCurveId.BC, "BC"),
                        (BoundaryCurveId.SIGMA, "sigma")):
        lo, hi = natural_range(domain, curve)
        s = np.linspace(lo, hi, samples_per_piece)
        xy, _ = _curve_fns(geo, curve)
        x, y = xy(s)
        x = np.broadcast_to(np.asarray(x, float), s.shape)
        y = -np.broadcast_to(np.asarray(y, float), s.shape)
        all_x.append(x)
        all_y.append(y)
        pts = " L ".join(f"{xi:.12g} {yi:.12g}" for xi, yi in zip(x, y))
        paths.append((name, pts))
    ax = np.concatenate(all_x)
    ay = np.concatenate(all_y)
    x0, x1 = float(ax.min()), float(ax.max())
    y0, y1 = float(ay.min()), float(ay.max())
    pad = 0.05 * max(x1 - x0, y1 - y0, 1e-9)
    vb = f"{x0 - pad:.12g} {y0 - pad:.12g} {x1 - x0 + 2 * pad:.12g} {y1 - y0 + 2 * pad:.12g}"
    sw = 0.004 * max(x1 - x0, y1 - y0, 1e-9)
    body = "\n".join(
        f'  <path id="{name}" d="M {pts}" fill="none" stroke="{colors[name]}" '
        f'stroke-width="{sw:.12g}"/>' for name, pts in paths)
    return (f'<svg xmlns="http://www.w3.org/2000/svg" viewBox="{vb}" '
            f'width="480" height="480">\n{body}\n</svg>\n')
