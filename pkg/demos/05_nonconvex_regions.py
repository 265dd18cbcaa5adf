"""Non-convex regions and anchors on the boundary.

The angular route needs only the mass profile seen from the anchor, so it
works for regions that are not star-shaped about it.  The crescent
x <= x^2 + y^2 <= 1 anchored at the origin is one example; a C-shaped polygon
is another.  Bounds from the smallest half-turn mass bracket every case.
"""

import math

from randtri import analysis, kernel, montecarlo
from randtri import region as rg

cases = [
    ("crescent at origin", rg.crescent(), (0.0, 0.0)),
    ("C-shape in its notch", rg.Polygon([(0, 0), (3, 0), (3, 1), (1, 1), (1, 2), (3, 2), (3, 3), (0, 3)]),
     (0.5, 1.5)),
    ("L-shape", rg.Polygon([(0, 0), (2, 0), (2, 1), (1, 1), (1, 2), (0, 2)]), (0.5, 0.4)),
    ("cardioid at its cusp", rg.cardioid(), (0.0, 0.0)),
]

for name, region, anchor in cases:
    f = rg.angular_density(region, anchor)
    full = kernel.probability(f).value
    median = kernel.probability_median(f).value
    rep = analysis.bounds(region, anchor)
    est = montecarlo.estimate_probability(region, anchor, n=300_000, seed=5)
    print(name)
    print(f"  full turn {full:.10f}  median direction {median:.10f}")
    print(f"  simulation {est.p_hat:.5f} +- {est.std_err:.5f}")
    print(f"  h={rep.h:.5f}  {rep.lower:.6f} <= P <= {rep.upper:.6f}")

print()
print("crescent closed form (4 pi^2 - 5)/(18 pi^2) =", f"{(4 * math.pi**2 - 5) / (18 * math.pi**2):.10f}")
print()
print("Approaching the boundary")
for label, region, point, direction in [
    ("square edge midpoint", rg.unit_square(), (0.5, 0.0), (0.0, 1.0)),
    ("cardioid cusp", rg.cardioid(), (0.0, 0.0), (1.0, 0.0)),
]:
    probe = analysis.boundary_limit_probe(region, point, direction, steps=4, first_step=0.02)
    print(f"  {label}: " + ", ".join(f"{p:.4f}" for _, p in probe))
print("  (a supporting line sends the value to 0; at the cusp it tends to the pole value)")
