"""Containment probability from an angular density.

With ``G`` the cumulative mass of the angular density ``f`` and
``H(t) = G(t + pi) - G(t)`` the mass of the half-plane to the left of the
directed chord through the anchor, the probability that a uniform random
triangle contains the anchor is

    P = 1/4 - 3 * integral over the full turn of (1/2 - H)**2 f.

The half-turn variants, based at an arbitrary direction ``u`` or at a
direction where ``H = 1/2``, and the double integral over pairs of
directions are kept as independent cross-checks.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass

import numpy as np

from .errors import ConsistencyError
from .quadrature import integrate
from .region import TWO_PI, AngularDensity, Region, angular_density

log = logging.getLogger(__name__)

DEFAULT_TOL = 1e-10

# method tags
CLOSED_FORM = "closed_form"
QUADRATURE = "quadrature"                  # full-turn formula, no base direction
QUADRATURE_ANCHORED = "quadrature_anchored"  # half-turn formula from a base direction u
QUADRATURE_MEDIAN = "quadrature_median"    # half-turn formula from a direction with H = 1/2
DOUBLE_INTEGRAL = "double_integral"
MONTE_CARLO = "monte_carlo"


@dataclass(frozen=True)
class ProbabilityResult:
    value: float
    method: str
    error_estimate: float


@dataclass(frozen=True)
class MassProfile:
    """Cumulative mass ``G`` and half-turn mass ``H`` of an angular density."""

    density: AngularDensity

    @property
    def breakpoints(self) -> np.ndarray:
        return self.density.breakpoints

    def G(self, theta):
        return self.density.cumulative(theta)

    def H(self, theta):
        return self.density.half_mass(theta)

    def kinks(self) -> np.ndarray:
        """Directions where ``H`` may fail to be smooth."""
        bp = self.density.breakpoints
        return np.unique(np.mod(np.concatenate([bp, bp + math.pi]), TWO_PI))


def mass_profile(f: AngularDensity) -> MassProfile:
    return MassProfile(f)


def _edges(profile: MassProfile, lo: float, hi: float) -> np.ndarray:
    """Panel edges on ``[lo, hi]``: the kinks of ``H`` lifted into the interval."""
    k = profile.kinks()
    lifted = lo + np.mod(k - lo, TWO_PI)
    inner = lifted[(lifted > lo) & (lifted < hi)]
    n_min = max(2, int(math.ceil((hi - lo) / (math.pi / 4))))
    base = np.linspace(lo, hi, n_min + 1)
    return np.unique(np.concatenate([base, inner]))


def _clamp(raw: float, method: str, err: float) -> ProbabilityResult:
    value = min(max(raw, 0.0), 0.25)
    if value != raw:
        log.debug("%s: raw value %.17g clamped to %.17g", method, raw, value)
    return ProbabilityResult(value, method, err)


def probability(f: AngularDensity, tol: float = DEFAULT_TOL) -> ProbabilityResult:
    """Containment probability from the full-turn formula."""
    prof = mass_profile(f)

    def integrand(t):
        d = 0.5 - prof.H(t)
        return d * d * f(t)

    q = integrate(integrand, _edges(prof, 0.0, TWO_PI), tol=tol / 3.0)
    return _clamp(0.25 - 3.0 * q.value, QUADRATURE, 3.0 * q.error)


def probability_via_u(f: AngularDensity, u: float, tol: float = DEFAULT_TOL) -> ProbabilityResult:
    """Half-turn formula based at direction ``u``, checked against its squared-deficit form.

    ``P = -x**2 (3 - 2x) + 6 * int_u^{u+pi} H (1 - H) f`` with ``x = H(u)``, and
    equivalently ``P = 1/4 - (1 - 2x)**3 / 4 - 6 * int_u^{u+pi} (1/2 - H)**2 f``.
    """
    prof = mass_profile(f)
    u = float(u)
    edges = _edges(prof, u, u + math.pi)
    x = float(prof.H(u))

    def mixed(t):
        h = prof.H(t)
        return h * (1.0 - h) * f(t)

    def deficit(t):
        d = 0.5 - prof.H(t)
        return d * d * f(t)

    q1 = integrate(mixed, edges, tol=tol / 6.0)
    q2 = integrate(deficit, edges, tol=tol / 6.0)
    p_mixed = -x * x * (3.0 - 2.0 * x) + 6.0 * q1.value
    p_deficit = 0.25 - (1.0 - 2.0 * x) ** 3 / 4.0 - 6.0 * q2.value
    err = 6.0 * q1.error
    allowed = max(10.0 * 6.0 * (q1.error + q2.error), 1e-12)
    if abs(p_mixed - p_deficit) > allowed:
        raise ConsistencyError(
            f"half-turn forms disagree at u={u}: {p_mixed!r} vs {p_deficit!r}")
    return _clamp(p_mixed, QUADRATURE_ANCHORED, err)


def find_median_angle(profile: MassProfile) -> float:
    """A direction ``u`` in ``[0, pi]`` with ``H(u) = 1/2`` (returns 0 when ``H(0)`` already is)."""
    g0 = float(profile.H(0.0)) - 0.5
    if abs(g0) <= 1e-12:
        return 0.0
    lo, hi = 0.0, math.pi
    # H(pi) - 1/2 = -(H(0) - 1/2): the sign change is guaranteed
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        gm = float(profile.H(mid)) - 0.5
        if gm == 0.0 or abs(gm) <= 1e-13 and hi - lo < 1e-9:
            return mid
        if (gm > 0) == (g0 > 0):
            lo = mid
        else:
            hi = mid
        if hi - lo <= 4 * np.finfo(float).eps * max(1.0, hi):
            break
    return 0.5 * (lo + hi)


def probability_median(f: AngularDensity, tol: float = DEFAULT_TOL) -> ProbabilityResult:
    """Half-turn formula from a median direction, where the boundary term drops out."""
    prof = mass_profile(f)
    u = find_median_angle(prof)

    def deficit(t):
        d = 0.5 - prof.H(t)
        return d * d * f(t)

    q = integrate(deficit, _edges(prof, u, u + math.pi), tol=tol / 6.0)
    return _clamp(0.25 - 6.0 * q.value, QUADRATURE_MEDIAN, 6.0 * q.error)


def _direction_grid(f: AngularDensity, n_cells: int):
    """Cell edges on ``[0, 2*pi]`` aligned with all kinks and invariant under a half turn."""
    kinks = np.mod(f.breakpoints, math.pi)
    edges = np.unique(np.concatenate([[0.0, math.pi], kinks]))
    widths = np.diff(edges)
    widths_ok = widths > 1e-15
    edges = np.concatenate([edges[:-1][widths_ok], [math.pi]])
    widths = np.diff(edges)
    half = max(n_cells // 2, widths.size)
    counts = np.maximum(1, np.round(widths / math.pi * half).astype(int))
    parts = [np.linspace(a, b, c + 1)[:-1] for a, b, c in zip(edges[:-1], edges[1:], counts)]
    lower = np.concatenate(parts + [[math.pi]])
    return np.concatenate([lower[:-1], lower + math.pi])


def _double_integral_midpoint(f: AngularDensity, n_cells: int) -> float:
    edges = _direction_grid(f, n_cells)
    mid = 0.5 * (edges[:-1] + edges[1:])
    w = np.diff(edges)
    n = mid.size
    h = n // 2
    cum = f.cumulative(mid)
    ext = np.concatenate([cum, cum + 1.0, cum + 2.0])
    fw = f(mid) * w

    i = np.arange(n)[:, None]
    j = np.arange(n)[None, :]
    k = (j - i) % n
    # wedge between the antipodes of directions i and j (opening < pi)
    fwd = ext[i + h + np.minimum(k, h)] - ext[i + h]
    back = ext[j + h + np.minimum(n - k, h)] - ext[j + h]
    area = np.where(k < h, fwd, back)
    area = np.where(k == h, 0.5 * (fwd + back), area)
    area = np.where(k == 0, 0.0, area)
    return float(fw @ area @ fw)


def probability_double_integral(region: Region, anchor=None, n_panels: int = 256) -> ProbabilityResult:
    """Slow oracle: midpoint tensor rule on pairs of directions, Richardson-extrapolated.

    For directions ``s`` and ``t`` the third vertex must fall in the wedge
    between the opposite directions ``s + pi`` and ``t + pi``; its mass is
    read off the cumulative profile.
    """
    if n_panels < 64:
        raise ValueError("n_panels must be at least 64")
    f = angular_density(region, anchor)
    coarse = _double_integral_midpoint(f, n_panels)
    fine = _double_integral_midpoint(f, 2 * n_panels)
    value = (4.0 * fine - coarse) / 3.0
    return ProbabilityResult(value, DOUBLE_INTEGRAL, abs(fine - coarse) / 3.0)


def _golden_min(func, a: float, b: float, iters: int = 80) -> tuple[float, float]:
    invphi = (math.sqrt(5.0) - 1.0) / 2.0
    c = b - invphi * (b - a)
    d = a + invphi * (b - a)
    fc, fd = func(c), func(d)
    for _ in range(iters):
        if fc < fd:
            b, d, fd = d, c, fc
            c = b - invphi * (b - a)
            fc = func(c)
        else:
            a, c, fc = c, d, fd
            d = a + invphi * (b - a)
            fd = func(d)
        if b - a < 1e-15:
            break
    return (c, fc) if fc < fd else (d, fd)


def minimize_on_circle(func, profile: MassProfile, n_grid: int = 2048,
                       n_refine: int = 4) -> tuple[float, float]:
    """Global minimum of a piecewise-smooth periodic function of direction.

    Scans a uniform grid merged with the kinks of ``H``, then golden-section
    refines around the best few grid points.
    """
    grid = np.unique(np.concatenate([np.linspace(0.0, TWO_PI, n_grid, endpoint=False),
                                     profile.kinks()]))
    vals = np.asarray(func(grid), dtype=float)
    best_t, best_v = float(grid[np.argmin(vals)]), float(np.min(vals))
    m = grid.size
    for i in np.argsort(vals, kind="stable")[:n_refine]:
        lo = grid[i - 1] if i > 0 else grid[-1] - TWO_PI
        hi = grid[i + 1] if i + 1 < m else grid[0] + TWO_PI
        t, v = _golden_min(lambda x: float(func(np.array(x))), float(lo), float(hi))
        if v < best_v:
            best_t, best_v = float(np.mod(t, TWO_PI)), v
    return best_t, best_v


def min_half_mass(profile: MassProfile) -> float:
    """``h = min H`` over all directions; lies in ``[0, 1/2]``."""
    _, h = minimize_on_circle(profile.H, profile)
    return float(min(max(h, 0.0), 0.5))


def containment_probability(region: Region, anchor=None, tol: float = DEFAULT_TOL) -> ProbabilityResult:
    """Convenience: density of ``region`` about ``anchor`` fed to :func:`probability`."""
    return probability(angular_density(region, anchor), tol=tol)
