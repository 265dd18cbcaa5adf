"""Disks: off-center anchors, removed wedges and the four-point problem.

Moving the anchor away from the center of a disk breaks the symmetry and the
probability drops from 1/4 toward 0 at the rim.  Averaging it over the disk
gives the chance that one of four random points lies inside the triangle of
the other three.  A disk with a wedge removed has an elementary closed form.
"""

from randtri import closed_forms, kernel, montecarlo
from randtri import region as rg

print("Anchor at fraction r of the radius")
for r in (0.0, 0.25, 0.5, 0.75, 0.9):
    cf = closed_forms.offset_disk_probability(r)
    q = kernel.containment_probability(rg.OffsetDisk(r=r)).value
    print(f"  r={r:4.2f}  one-dimensional integral {cf:.10f}  quadrature {q:.10f}")
print()

avg = closed_forms.offset_disk_average()
syl = montecarlo.sylvester_nonconvex(rg.Disk(), n=1_000_000, seed=4)
print(f"area average      {avg.value:.12f}")
print(f"35/(48 pi^2)      {avg.reference:.12f}")
print(f"simulation        {syl.p_hat:.6f} +- {syl.std_err:.6f}")
print(f"non-convex chance {4 * avg.value:.6f} (times four)")
print()

print("Disk with the wedge |t| < pi a removed, anchor at the center")
for a in (0.0, 0.1, 0.25, 0.4, 0.5):
    cf = closed_forms.slice_disk_probability(a)
    q = kernel.containment_probability(rg.DiskSlice(a)).value
    print(f"  a={a:4.2f}  formula {cf:.10f}  quadrature {q:.10f}")
print(f"a=1/4 gives 5/27 = {5 / 27:.10f}; a=1/2 leaves the anchor on a straight edge, so 0")
