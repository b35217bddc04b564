"""Dilation scaling laws for the L^p and weighted-gradient norms, and the
sign of the sigma-arc boundary energy across the fixtures."""
from tricomi import (Const, OperatorParams, X, Y, coefficients, manufactured,
                     reference_domains, scaling_ratios, sigma_boundary_sign)

bump = (Const(1.0) - X ** 2) * (Const(1.0) - Y ** 2)

print("(m1,m2)  lam    lp ratio        lam^kappa    grad ratio      lam^mu")
for m1, m2 in ((1, 0), (1, 4)):
    co = coefficients(OperatorParams(m1, m2))
    for lam in (0.5, 2.0, 3.0):
        got = scaling_ratios(bump, lam, 4.0, co)
        print(f"({m1},{m2})    {lam:3.1f}  {got['lp_ratio']:14.9f} "
              f"{lam ** co.kappa:12.6f}  {got['grad_ratio']:13.9f} "
              f"{lam ** co.mu:10.4f}")

print()
print("sigma-arc energy integral (nonnegative whenever sigma stays in y >= 0)")
for dom in reference_domains():
    val = sigma_boundary_sign(manufactured(dom), dom)
    tag = "no claim" if dom.variant.value == "omega3" else "claimed >= 0"
    print(f"  {dom.variant.value}: {val:+.15e}   ({tag})")
