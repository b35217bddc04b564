"""The weighted Hardy package on (y_c, 0): Muckenhoupt product, two-sided
constant bounds, and randomized checks of the inequality and the boundary
energy functional."""
import numpy as np

from tricomi import (HardyParams, OperatorParams, boundary_energy_I,
                     equivalence_chain, hardy_GL, hardy_GL_numeric,
                     hardy_constants, hardy_inequality_check,
                     hardy_weight_exponents, random_boundary_phi,
                     random_hardy_phi)

pq = HardyParams()            # p = q = 2 on (-1, 0)
for m1, m2 in ((1, 0), (1, 4), (3, 2)):
    params = OperatorParams(m1, m2)
    e1, e2 = hardy_weight_exponents(params)
    c = hardy_constants(params, pq)
    print(f"(m1,m2)=({m1},{m2})  weights v=(-t)^{e1} w=(-t)^{e2}")
    print(f"  M_L {c['M_L']}  r {c['r']}  C_L in [{c['C_L_low']}, "
          f"{c['C_L_high']}]  grid_sup {c['grid_sup']:.12f}")
    print(f"  chain exact: {equivalence_chain(params)}")

params = OperatorParams(1, 4)
print()
print("G_L closed form vs direct quadrature:")
for x in (-0.9, -0.5, -0.1):
    a = hardy_GL(params, pq.y_c, x)
    b = hardy_GL_numeric(params, pq, x)
    print(f"  x {x:+.2f}: closed {a:.15f}  numeric {b:.15f}  "
          f"diff {abs(a - b):.1e}")

rng = np.random.default_rng(42)
margins, energies = [], []
for _ in range(200):
    res = hardy_inequality_check(params, pq, random_hardy_phi(pq.y_c, rng))
    margins.append(res.lhs - res.rhs)
    energies.append(boundary_energy_I(params, pq.y_c,
                                      random_boundary_phi(pq.y_c, rng)))
print()
print(f"inequality margin over 200 random phi: max {max(margins):+.3e} "
      f"(nonpositive = held)")
print(f"boundary energy I over 200 random phi: min {min(energies):+.3e} "
      f"(nonnegative = held)")
