"""
Exact positive root isolation
=============================

Integer polynomials are handled exactly: Sturm sequences count roots,
bisection isolates them with rational brackets, and a sign profile
records the sign on every piece of (0, inf).
"""
from fractions import Fraction

from occulab.exactalg import (
    IntPolynomial,
    descartes_sign_changes,
    isolate_positive_roots,
    refine_root,
    sign_profile,
    sturm_count,
)

# (x - 1)^2 (x - 3) (x + 2): roots 1 (double) and 3 in (0, inf)
p = IntPolynomial([1, -1]) ** 2 * IntPolynomial([-3, 1]) * IntPolynomial([2, 1])
print("p =", p)
print("Descartes bound:", descartes_sign_changes(p))
print("Sturm count on (0, 10):", sturm_count(p, 0, 10))

# Brackets come from the squarefree part, so the double root is isolated too
for interval in isolate_positive_roots(p):
    print(f"bracket {interval[0]}..{interval[1]} -> root {float(refine_root(p, interval, Fraction(1, 10**9))):.9f}")

# The sign profile keeps the double root as a breakpoint with no sign change
prof = sign_profile(p, Fraction(1, 10**6))
print(prof.to_json())
