"""The three step identities and the defect-form balance on one fixture,
printed as lhs / rhs / relative error."""
from tricomi import (cubic_nonlinearity, manufactured, omega1,
                     pohozaev_residual, power_nonlinearity, step1_residual,
                     step2_residual, step3_residual)

dom = omega1(1, 4, -0.5)
u = manufactured(dom)
cubic = cubic_nonlinearity()

rows = [
    step1_residual(u, dom),
    step2_residual(u, cubic, dom),
    step2_residual(u, power_nonlinearity(2.5), dom),
    step3_residual(u, dom),
    pohozaev_residual(u, cubic, dom),
]
print(f"{'identity':10s} {'f':7s} {'lhs':>22s} {'rhs+defect':>22s} {'rel':>9s}")
for r in rows:
    print(f"{r.identity:10s} {r.f or '-':7s} {r.lhs:22.15e} "
          f"{r.rhs + r.defect:22.15e} {r.rel_err:9.2e}")

po = rows[-1]
print()
print(f"pohozaev split: boundary rhs {po.rhs:.15e}")
print(f"                defect       {po.defect:.15e}")
print(f"note: {po.note}")
print()
print("one report as JSON:")
print(rows[0].to_json())
