"""Triangles: the probability depends only on the barycentric coordinates.

A uniform random triangle inside a triangle ABC contains the point O with a
probability that is an affine invariant, so it is a function of the areal
coordinates of O alone.  We evaluate it on a lattice, check it through the
angular quadrature on a skewed triangle, and locate the maximiser.
"""

import numpy as np

from randtri import analysis, closed_forms, kernel
from randtri import region as rg

skewed = [(0.0, 0.0), (3.0, 0.0), (0.5, 2.0)]
tri = rg.Polygon(skewed)

print("Lattice of barycentric points (alpha, beta, gamma), step 1/6")
best = None
for i in range(1, 5):
    for j in range(1, 6 - i):
        k = 6 - i - j
        p = (i / 6, j / 6, k / 6)
        cf = closed_forms.triangle_probability(p)
        q = kernel.containment_probability(tri, rg.point_from_barycentric(skewed, p)).value
        print(f"  ({i}/6, {j}/6, {k}/6)  formula {cf:.10f}  quadrature {q:.10f}")
        if best is None or cf > best[1]:
            best = (p, cf)
print(f"largest lattice value at {tuple(round(x, 4) for x in best[0])}: {best[1]:.10f}")
print()

centroid = closed_forms.triangle_probability((1 / 3, 1 / 3, 1 / 3))
rep = analysis.bounds(rg.equilateral_triangle())
print(f"centroid value {centroid:.10f}")
print(f"half-turn minimum h = {rep.h:.10f}; bounds [{rep.lower:.8f}, {rep.upper:.8f}]")
print()

search = analysis.maximize(tri)
bary = rg.barycentric_coordinates(skewed, search.argmax)
print(f"grid + Nelder-Mead search: {len(search.trace)} evaluations")
print(f"  argmax barycentric {np.round(bary, 7)}  p_max {search.p_max:.10f}")
