"""Containment probability of a random triangle for planar regions.

Three independent routes are provided: closed forms for worked families
(:mod:`randtri.closed_forms`), one-dimensional quadrature over the angular
density of the region seen from the anchor (:mod:`randtri.kernel`), and
seeded Monte Carlo (:mod:`randtri.montecarlo`).
"""

from .analysis import bounds, maximize, sandwich, symmetry_defect
from .errors import (ConsistencyError, DegenerateRegion, DomainError, NumericalFailure,
                     QuadratureError, RegionSpecError, RejectionBudgetExceeded)
from .kernel import (ProbabilityResult, containment_probability, mass_profile, probability,
                     probability_double_integral, probability_median, probability_via_u)
from .montecarlo import McEstimate, estimate_probability, sylvester_nonconvex
from .region import (Disk, DiskSlice, OffsetDisk, PolarGraph, Polygon, RadialSlices,
                     angular_density, annulus, cardioid, crescent, equilateral_triangle,
                     limacon, regular_polygon, unit_square)

__version__ = "0.1.0"

__all__ = [
    "ConsistencyError", "DegenerateRegion", "Disk", "DiskSlice", "DomainError", "McEstimate",
    "NumericalFailure", "OffsetDisk", "PolarGraph", "Polygon", "ProbabilityResult",
    "QuadratureError", "RadialSlices", "RegionSpecError", "RejectionBudgetExceeded",
    "angular_density", "annulus", "bounds", "cardioid", "containment_probability", "crescent",
    "equilateral_triangle", "estimate_probability", "limacon", "mass_profile", "maximize",
    "probability", "probability_double_integral", "probability_median", "probability_via_u",
    "regular_polygon", "sandwich", "sylvester_nonconvex", "symmetry_defect", "unit_square",
]
