"""Anchors in the unit square.

The square value is reduced by symmetry to 0 < v <= u <= 1/2 and obtained
from four one-dimensional boundary integrals.  Along the diagonal there is a
closed form.  Averaging over all anchors recovers the four-point value 11/144.
"""

import math

import numpy as np

from randtri import closed_forms, kernel, montecarlo
from randtri import region as rg

sq = rg.unit_square()
e = math.e

print("Named anchors")
for label, (u, v) in [("(1/2, 1/4)", (0.5, 0.25)), ("(1/3, 1/3)", (1 / 3, 1 / 3)),
                      ("(1/(1+e), 1/(1+e))", (1 / (1 + e), 1 / (1 + e))), ("center", (0.5, 0.5))]:
    cf = closed_forms.square_probability(u, v)
    q = kernel.containment_probability(sq, (u, v)).value
    est = montecarlo.estimate_probability(sq, (u, v), n=200_000, seed=3)
    print(f"  {label:>20}  boundary integrals {cf:.10f}  quadrature {q:.10f}  "
          f"simulation {est.p_hat:.4f} +- {est.std_err:.4f}")

u = 1 / (1 + e)
print()
print("At u = 1/(1+e) the diagonal formula reduces to")
print("  (e^5 + 6e^4 + 13e^3 + 7e^2 - 6e + 1) / (e (e+1)^6) =",
      f"{(e**5 + 6*e**4 + 13*e**3 + 7*e**2 - 6*e + 1) / (e * (e + 1)**6):.12f}")
print("  diagonal formula                                 =",
      f"{closed_forms.square_diagonal_probability(u):.12f}")
print()

print("Profile along the diagonal")
for t in (0.02, 0.1, 0.2, 0.3, 0.4, 0.5):
    print(f"  u={t:4.2f}  P={closed_forms.square_diagonal_probability(t):.8f}")
print()

x, w = np.polynomial.legendre.leggauss(24)
x, w = 0.25 * (x + 1), 0.25 * w
avg = 4 * sum(wi * wj * closed_forms.square_probability(xi, xj)
              for xi, wi in zip(x, w) for xj, wj in zip(x, w))
syl = montecarlo.sylvester_nonconvex(sq, n=500_000, seed=3)
print(f"average over anchors {avg:.10f}  vs 11/144 = {11 / 144:.10f}")
print(f"four-point simulation {syl.p_hat:.5f} +- {syl.std_err:.5f}")
