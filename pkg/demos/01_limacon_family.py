"""Limacons seen from their pole.

A limacon r = c (a + cos t) is convex for a >= 2, dimpled for 1 < a < 2 and
a cardioid at a = 1, where the pole sits on the boundary.  The script compares
three routes to the containment probability for a few members of the family
and shows how far each is from the centrally symmetric ceiling of 1/4.
"""

import numpy as np

from randtri import closed_forms, kernel, montecarlo
from randtri import region as rg

print("Angular density about the pole of the a=2 limacon")
f = rg.angular_density(rg.limacon(2.0))
for t in np.linspace(0, np.pi, 5):
    print(f"  t={t:5.3f}  f={f(t):.6f}  H={f.half_mass(t):.6f}")
print()

print(f"{'a':>6} {'closed form':>14} {'quadrature':>14} {'monte carlo':>20}  min H")
for a in (1.0, 1.5, 2.0, 3.0, 10.0):
    region = rg.limacon(a)
    exact = closed_forms.limacon_probability(a)
    q = kernel.containment_probability(region).value
    est = montecarlo.estimate_probability(region, n=200_000, seed=1)
    h = closed_forms.limacon_min_half_mass(a)
    print(f"{a:6.1f} {exact:14.10f} {q:14.10f} {est.p_hat:10.5f} +- {est.std_err:.5f}  {h:.4f}")
print()
print("Every member falls short of 1/4: no limacon is centrally symmetric about its pole.")
