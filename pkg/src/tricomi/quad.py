"""Deterministic composite Gauss-Legendre quadrature over the domain
charts, with a two-level refinement check.

Every integral is evaluated on the configured panel count and on half as
many panels; disagreement beyond the configured tolerances raises
NonConvergence instead of returning a silently wrong number.

Boundary integrals use the convention form(x, y) -> (P, Q) meaning the
differential P dx + Q dy along the positively oriented boundary, so the
outward flux of a vector field (Fx, Fy) is the form (-Fy, Fx).
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .errors import NonConvergence
from .geometry import (AreaChart, BoundaryCurveId, CurveChart, DomainSpec,
                       area_charts, boundary_charts)

__all__ = [
    "QuadConfig",
    "Residual",
    "UnitSquare",
    "GridLevel",
    "CurveGridLevel",
    "integrate_interval",
    "integrate_neg_interval",
    "integrate_domain",
    "integrate_curve",
    "integrate_boundary",
    "domain_grids",
    "curve_grids",
    "boundary_grids",
    "check_two_level",
    "divergence_selftest",
]


@dataclass(frozen=True)
class QuadConfig:
    gauss_order: int = 16
    panels_per_axis: int = 32
    grade_endpoints: bool = True
    abs_tol: float = 1e-10
    rel_tol: float = 1e-9

    def __post_init__(self):
        if not (isinstance(self.gauss_order, int) and self.gauss_order >= 2):
            raise ValueError("gauss_order must be an integer >= 2")
        if not (isinstance(self.panels_per_axis, int) and self.panels_per_axis >= 1):
            raise ValueError("panels_per_axis must be an integer >= 1")
        if not (self.abs_tol > 0 and self.rel_tol > 0):
            raise ValueError("tolerances must be positive")

    def coarse(self) -> "QuadConfig":
        return QuadConfig(self.gauss_order, max(1, self.panels_per_axis // 2),
                          self.grade_endpoints, self.abs_tol, self.rel_tol)


@dataclass(frozen=True)
class Residual:
    lhs: float
    rhs: float

    @property
    def abs_err(self) -> float:
        return abs(self.lhs - self.rhs)

    @property
    def rel_err(self) -> float:
        return self.abs_err / (abs(self.lhs) + abs(self.rhs) + 1.0)


@dataclass(frozen=True)
class UnitSquare:
    """Test fixture: [0,1]^2 with its counterclockwise boundary."""

    def area_charts(self):
        def fn(U, V):
            U = np.asarray(U, float)
            V = np.asarray(V, float)
            return U.copy(), V.copy(), np.ones_like(U)

        return [AreaChart("square", fn)]

    def boundary_charts(self):
        def edge(p0, p1):
            (x0, y0), (x1, y1) = p0, p1

            def fn(t):
                t = np.asarray(t, float)
                return (x0 + (x1 - x0) * t, y0 + (y1 - y0) * t,
                        np.full_like(t, x1 - x0), np.full_like(t, y1 - y0))

            return fn

        corners = [(0.0, 0.0), (1.0, 0.0), (1.0, 1.0), (0.0, 1.0)]
        names = ["bottom", "right", "top", "left"]
        return [CurveChart(None, names[i], 0.0, 1.0,
                           edge(corners[i], corners[(i + 1) % 4]))
                for i in range(4)]


@lru_cache(maxsize=64)
def _gauss(n: int):
    x, w = np.polynomial.legendre.leggauss(n)
    return x, w


@lru_cache(maxsize=512)
def _panel_nodes(lo: float, hi: float, order: int, panels: int):
    x, w = _gauss(order)
    edges = np.linspace(lo, hi, panels + 1)
    mid = 0.5 * (edges[:-1] + edges[1:])
    half = 0.5 * (edges[1:] - edges[:-1])
    t = (mid[:, None] + half[:, None] * x[None, :]).ravel()
    wt = (half[:, None] * w[None, :]).ravel()
    return t, wt


def check_two_level(fine: float, coarse: float, cfg: QuadConfig,
                    what: str = "integral") -> float:
    err = abs(fine - coarse)
    if err > max(cfg.abs_tol, cfg.rel_tol * (abs(fine) + abs(coarse) + 1.0)):
        raise NonConvergence(
            f"{what} did not settle: {fine!r} vs {coarse!r} "
            f"(panels {cfg.panels_per_axis} vs {max(1, cfg.panels_per_axis // 2)})")
    return fine


def _interval_sum(f, lo: float, hi: float, order: int, panels: int) -> float:
    t, w = _panel_nodes(lo, hi, order, panels)
    vals = np.asarray(f(t), dtype=float)
    return float(np.sum(vals * w))


def integrate_interval(f, lo: float, hi: float, cfg: QuadConfig) -> float:
    """Two-level composite Gauss integral of a vectorized f on [lo, hi]."""
    fine = _interval_sum(f, lo, hi, cfg.gauss_order, cfg.panels_per_axis)
    coarse = _interval_sum(f, lo, hi, cfg.gauss_order, max(1, cfg.panels_per_axis // 2))
    return check_two_level(fine, coarse, cfg, "interval integral")


def integrate_neg_interval(f, y_lo: float, cfg: QuadConfig,
                           graded: bool | None = None) -> float:
    """Integral of f over [y_lo, 0] for y_lo < 0.  When graded, substitute
    t = -s^2 so integrands with half-integer behavior at 0 become smooth."""
    if not y_lo < 0:
        raise ValueError("need y_lo < 0")
    if graded is None:
        graded = cfg.grade_endpoints
    if not graded:
        return integrate_interval(f, y_lo, 0.0, cfg)

    def g(s):
        return 2.0 * s * np.asarray(f(-(s * s)), dtype=float)

    return integrate_interval(g, 0.0, math.sqrt(-y_lo), cfg)


# ---------------------------------------------------------------------------
# grids over domains and their boundaries

@dataclass(frozen=True, eq=False)
class GridLevel:
    x: np.ndarray
    y: np.ndarray
    w: np.ndarray


@dataclass(frozen=True, eq=False)
class CurveGridLevel:
    x: np.ndarray
    y: np.ndarray
    wx: np.ndarray  # weight times dx/dtau (oriented)
    wy: np.ndarray  # weight times dy/dtau


def _area_charts_of(domain):
    if isinstance(domain, DomainSpec):
        return area_charts(domain)
    return domain.area_charts()


def _boundary_charts_of(domain, graded: bool):
    if isinstance(domain, DomainSpec):
        return boundary_charts(domain, graded=graded)
    return domain.boundary_charts()


def _build_area_level(domain, order: int, panels: int) -> GridLevel:
    t, w = _panel_nodes(0.0, 1.0, order, panels)
    U, V = np.meshgrid(t, t, indexing="ij")
    W2 = np.outer(w, w)
    xs, ys, ws = [], [], []
    for chart in _area_charts_of(domain):
        Xc, Yc, J = chart.fn(U, V)
        xs.append(np.asarray(Xc, float).ravel())
        ys.append(np.asarray(Yc, float).ravel())
        ws.append((np.asarray(J, float) * W2).ravel())
    return GridLevel(np.concatenate(xs), np.concatenate(ys), np.concatenate(ws))


def _build_curve_level(domain, graded: bool, order: int, panels: int,
                       curve_id: BoundaryCurveId | None) -> CurveGridLevel:
    xs, ys, wxs, wys = [], [], [], []
    for chart in _boundary_charts_of(domain, graded):
        if curve_id is not None and chart.curve is not curve_id:
            continue
        t, w = _panel_nodes(chart.lo, chart.hi, order, panels)
        x, y, dx, dy = chart.fn(t)
        xs.append(np.broadcast_to(np.asarray(x, float), t.shape).ravel())
        ys.append(np.broadcast_to(np.asarray(y, float), t.shape).ravel())
        wxs.append((np.broadcast_to(np.asarray(dx, float), t.shape) * w).ravel())
        wys.append((np.broadcast_to(np.asarray(dy, float), t.shape) * w).ravel())
    if not xs:
        raise ValueError(f"domain has no boundary piece {curve_id}")
    return CurveGridLevel(np.concatenate(xs), np.concatenate(ys),
                          np.concatenate(wxs), np.concatenate(wys))


@lru_cache(maxsize=24)
def domain_grids(domain, cfg: QuadConfig) -> tuple[GridLevel, GridLevel]:
    """(fine, coarse) tensor grids covering the domain, weights included."""
    fine = _build_area_level(domain, cfg.gauss_order, cfg.panels_per_axis)
    coarse = _build_area_level(domain, cfg.gauss_order, max(1, cfg.panels_per_axis // 2))
    return fine, coarse


@lru_cache(maxsize=96)
def curve_grids(domain, curve_id: BoundaryCurveId,
                cfg: QuadConfig) -> tuple[CurveGridLevel, CurveGridLevel]:
    fine = _build_curve_level(domain, cfg.grade_endpoints, cfg.gauss_order,
                              cfg.panels_per_axis, curve_id)
    coarse = _build_curve_level(domain, cfg.grade_endpoints, cfg.gauss_order,
                                max(1, cfg.panels_per_axis // 2), curve_id)
    return fine, coarse


@lru_cache(maxsize=24)
def boundary_grids(domain, cfg: QuadConfig) -> tuple[CurveGridLevel, CurveGridLevel]:
    fine = _build_curve_level(domain, cfg.grade_endpoints, cfg.gauss_order,
                              cfg.panels_per_axis, None)
    coarse = _build_curve_level(domain, cfg.grade_endpoints, cfg.gauss_order,
                                max(1, cfg.panels_per_axis // 2), None)
    return fine, coarse


def _eval_on(g, x, y):
    vals = g(x, y)
    vals = np.asarray(vals, dtype=float)
    if vals.shape != x.shape:
        vals = np.asarray(np.vectorize(g)(x, y), dtype=float)
    return vals


def integrate_domain(g, domain, cfg: QuadConfig) -> float:
    """Two-level area integral of a pointwise density g(x, y)."""
    fine, coarse = domain_grids(domain, cfg)
    vf = float(np.sum(_eval_on(g, fine.x, fine.y) * fine.w))
    vc = float(np.sum(_eval_on(g, coarse.x, coarse.y) * coarse.w))
    return check_two_level(vf, vc, cfg, "area integral")


def _curve_sum(form, level: CurveGridLevel) -> float:
    p, q = form(level.x, level.y)
    p = np.broadcast_to(np.asarray(p, float), level.x.shape)
    q = np.broadcast_to(np.asarray(q, float), level.x.shape)
    return float(np.sum(p * level.wx) + np.sum(q * level.wy))


def integrate_curve(form, domain, curve_id: BoundaryCurveId, cfg: QuadConfig) -> float:
    """Two-level integral of the 1-form P dx + Q dy over one boundary piece,
    traversed positively; form(x, y) -> (P, Q)."""
    fine, coarse = curve_grids(domain, curve_id, cfg)
    return check_two_level(_curve_sum(form, fine), _curve_sum(form, coarse),
                           cfg, f"curve integral on {getattr(curve_id, 'value', curve_id)}")


def integrate_boundary(form, domain, cfg: QuadConfig) -> float:
    """Two-level integral of P dx + Q dy around the whole boundary loop."""
    fine, coarse = boundary_grids(domain, cfg)
    return check_two_level(_curve_sum(form, fine), _curve_sum(form, coarse),
                           cfg, "boundary integral")


# ---------------------------------------------------------------------------
# divergence self-test (validates charts, weights and orientation together)

def _poly2d_coeffs(rng, deg: int = 3):
    c = np.zeros((deg + 1, deg + 1))
    for i in range(deg + 1):
        for j in range(deg + 1 - i):
            c[i, j] = rng.uniform(-1.0, 1.0)
    return c


def _polyval2d(c, x, y):
    return np.polynomial.polynomial.polyval2d(x, y, c)


def _polyder_x(c):
    return np.polynomial.polynomial.polyder(c, axis=0)


def _polyder_y(c):
    return np.polynomial.polynomial.polyder(c, axis=1)


def divergence_selftest(domain, cfg: QuadConfig) -> Residual:
    """Worst-case Gauss divergence check over F = (x, y) and three seeded
    random cubic vector fields: area integral of div F against the outward
    boundary flux.  Returns the worst Residual by relative error."""
    rng = np.random.default_rng(20250814)
    cases = []
    cases.append((lambda x, y: x, lambda x, y: y, lambda x, y: 2.0 * np.ones_like(x)))
    for _ in range(3):
        cp = _poly2d_coeffs(rng)
        cq = _poly2d_coeffs(rng)
        dpx, dqy = _polyder_x(cp), _polyder_y(cq)
        cases.append((
            lambda x, y, c=cp: _polyval2d(c, x, y),
            lambda x, y, c=cq: _polyval2d(c, x, y),
            lambda x, y, a=dpx, b=dqy: _polyval2d(a, x, y) + _polyval2d(b, x, y),
        ))
    worst = None
    for fx, fy, dv in cases:
        area = integrate_domain(dv, domain, cfg)
        flux = integrate_boundary(lambda x, y: (-fy(x, y), fx(x, y)), domain, cfg)
        r = Residual(area, flux)
        if worst is None or r.rel_err > worst.rel_err:
            worst = r
    return worst
