"""Bounds, symmetry and extremal questions for the containment probability."""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np
from scipy.optimize import minimize

from .errors import ConsistencyError, DomainError
from .kernel import mass_profile, min_half_mass, minimize_on_circle, probability
from .region import Region, angular_density, as_point

SANDWICH_TOL = 1e-9


def sandwich(h: float) -> tuple[float, float]:
    """Lower and upper bounds on the probability given ``h = min H``."""
    d = 0.5 - h
    return 0.25 - (1.0 + 4.0 * h) * d * d, 0.25 - 2.0 * d ** 3


@dataclass(frozen=True)
class BoundsReport:
    h: float
    lower: float
    upper: float
    p: float


def bounds(region: Region, anchor=None) -> BoundsReport:
    f = angular_density(region, anchor)
    h = min_half_mass(mass_profile(f))
    lower, upper = sandwich(h)
    p = probability(f).value
    if not lower - SANDWICH_TOL <= p <= upper + SANDWICH_TOL:
        raise ConsistencyError(f"probability {p!r} outside [{lower!r}, {upper!r}] (h={h!r})")
    return BoundsReport(h, lower, upper, p)


def symmetry_defect(region: Region, anchor=None) -> float:
    """``sup |H - 1/2|`` over all directions; zero exactly for centrally symmetric regions."""
    prof = mass_profile(angular_density(region, anchor))
    _, v = minimize_on_circle(lambda t: -np.abs(prof.H(t) - 0.5), prof)
    return float(-v)


def chord_balance(region: Region, anchor=None) -> tuple[float, float, float]:
    """``(t0, r(t0), r(t0 + pi))`` at the direction minimising ``H``.

    For a region star-shaped about the anchor with a smooth boundary there,
    the anchor halves the chord at ``t0``.  ``r`` is the outer end of the last
    radial slice.
    """
    o = as_point(region.default_anchor if anchor is None else anchor)
    prof = mass_profile(angular_density(region, o))
    t0, _ = minimize_on_circle(prof.H, prof)

    def reach(t):
        slices = region.radial_slices(o, float(np.mod(t, 2 * math.pi)))
        return slices[-1][1] if slices else 0.0

    return t0, reach(t0), reach(t0 + math.pi)


def boundary_limit_probe(region: Region, boundary_point, direction, steps: int = 8,
                         first_step: float | None = None, ratio: float = 0.5):
    """Probabilities at ``boundary_point + eps_k * direction`` for ``eps_k = first_step * ratio**k``.

    Returns ``[(eps_k, P_k), ...]`` with ``eps_k`` decreasing.  Whether the
    sequence must tend to zero depends on a supporting line existing at the
    boundary point, which the caller is responsible for.
    """
    b = as_point(boundary_point)
    d = as_point(direction)
    d = d / np.linalg.norm(d)
    if first_step is None:
        x0, y0, x1, y1 = region.bounding_box()
        first_step = 0.1 * max(x1 - x0, y1 - y0)
    out = []
    for k in range(steps):
        eps = first_step * ratio ** k
        o = b + eps * d
        if not bool(region.contains(o)):
            raise DomainError(f"probe anchor {tuple(float(c) for c in o)} left the region")
        out.append((eps, probability(angular_density(region, o)).value))
    return out


@dataclass
class MaximizerReport:
    argmax: tuple[float, float]
    p_max: float
    trace: list = field(default_factory=list)


def maximize(region: Region, grid: int = 16, refine_iters: int = 200) -> MaximizerReport:
    """Empirical maximiser of the probability over anchors.

    A ``grid x grid`` scan of cell centers of the bounding box (row-major,
    first maximum wins) seeds a Nelder-Mead refinement.  Every evaluated
    anchor is recorded in ``trace``; no global optimality is claimed.
    """
    if grid < 8:
        raise ValueError("grid must be at least 8")
    x0, y0, x1, y1 = region.bounding_box()
    dx, dy = (x1 - x0) / grid, (y1 - y0) / grid
    trace: list = []

    def value(point):
        point = np.asarray(point, dtype=float)
        if not bool(region.contains(point)):
            return None
        try:
            p = probability(angular_density(region, point)).value
        except DomainError:
            return None
        trace.append(((float(point[0]), float(point[1])), p))
        return p

    best, best_p = None, -1.0
    for iy in range(grid):
        for ix in range(grid):
            pt = (x0 + (ix + 0.5) * dx, y0 + (iy + 0.5) * dy)
            p = value(pt)
            if p is not None and p > best_p:
                best, best_p = pt, p
    if best is None:
        raise DomainError("no grid point of the region admits an anchor")

    def objective(x):
        p = value(x)
        return 1.0 if p is None else -p

    start = np.array(best)
    simplex = np.array([start, start + [dx / 2, 0.0], start + [0.0, dy / 2]])
    minimize(objective, start, method="Nelder-Mead",
             options=dict(maxiter=refine_iters, xatol=1e-9, fatol=1e-15,
                          initial_simplex=simplex))
    point, p_max = max(trace, key=lambda item: item[1])
    return MaximizerReport(point, p_max, trace)
