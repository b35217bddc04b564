"""Critical exponents and variant admissibility across small (m1, m2)."""
from tricomi import (OperatorParams, Variant, coefficients, critical_exponent,
                     is_admissible, supercritical_threshold)

print("m1 m2 |   mu kappa | 2*-1        threshold")
print("------+------------+----------------------")
for m1 in (1, 3, 5):
    for m2 in (0, 2, 4):
        params = OperatorParams(m1, m2)
        co = coefficients(params)
        e = critical_exponent(params)
        t = supercritical_threshold(params)
        print(f"{m1:2d} {m2:2d} | {co.mu:4d} {co.kappa:5d} | {str(e):11s} {t}")

print()
print("admissibility (variant needs m1 odd; omega1 also needs 4 | m2)")
header = "m1 m2 | " + "  ".join(v.value for v in Variant)
print(header)
print("-" * len(header))
for m1 in (1, 2, 3):
    for m2 in (0, 2, 4):
        params = OperatorParams(m1, m2)
        marks = "       ".join("y" if is_admissible(params, v.value) else "."
                               for v in Variant)
        print(f"{m1:2d} {m2:2d} |  {marks}")
