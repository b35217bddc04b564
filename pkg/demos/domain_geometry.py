"""Tour of the four domain fixtures: closed-form apexes, dilation-flow
tangency of BC, star-shape reports, and CSV/SVG boundary export."""
import numpy as np

from tricomi import (BoundaryCurveId, apex, boundary_csv, boundary_svg,
                     check_starshaped, coefficients, curve_point, endpoints,
                     flow, natural_range, omega1, omega2, omega3, omega4)

fixtures = [omega1(1, 4, -0.5), omega2(1, 4, 0.5),
            omega3(1, 4, -0.5), omega4(1, 0, -0.5)]

for dom in fixtures:
    a, b = endpoints(dom)
    c = apex(dom)
    rep = check_starshaped(dom)
    print(f"{dom.variant.value}  m=({dom.params.m1},{dom.params.m2})  "
          f"anchor {dom.anchor}")
    print(f"  A = ({a.x:+.12f}, {a.y:+.12f})   B = ({b.x:+.12f}, {b.y:+.12f})")
    print(f"  apex = ({c.x:+.12f}, {c.y:+.12f})")
    print(f"  starlike {rep.is_starlike}  min form {rep.min_form:.3e}")

    # the dilation flow must slide points along BC without leaving it:
    # re-read the flowed point off the curve at its own natural parameter
    co = coefficients(dom.params)
    lo, hi = natural_range(dom, BoundaryCurveId.BC)
    p = curve_point(dom, BoundaryCurveId.BC, lo + 0.37 * (hi - lo))
    drift = 0.0
    for t in (0.25, 1.0, 2.0):
        q = flow(p, t, co)
        s = q.y if dom.variant.value in ("omega1", "omega2") else q.x
        back = curve_point(dom, BoundaryCurveId.BC, s)
        drift = max(drift, float(np.hypot(back.x - q.x, back.y - q.y)))
    print(f"  flow drift off BC over t <= 2: {drift:.2e}")

dom = fixtures[0]
with open("omega1_boundary.csv", "w", encoding="utf-8") as fh:
    fh.write(boundary_csv(dom, 200))
with open("omega1_boundary.svg", "w", encoding="utf-8") as fh:
    fh.write(boundary_svg(dom, 200))
print("wrote omega1_boundary.csv and omega1_boundary.svg")
