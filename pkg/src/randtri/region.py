"""Planar regions seen from an anchor point, and their angular densities.

The angular density ``f`` of a region about an anchor ``O`` is the density in
the polar angle ``theta`` (measured at ``O``) of the normalised area: for any
wedge ``[t1, t2]`` of opening at most ``pi`` the integral of ``f`` over the
wedge is the fraction of the region's area inside it.  If a ray from ``O`` at
angle ``theta`` meets the region in the intervals ``[r_in_k, r_out_k]`` then

    f(theta) = sum_k (r_out_k**2 - r_in_k**2) / (2 * area).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import cached_property
from typing import Callable, Optional, Sequence

import numpy as np

from .errors import DegenerateRegion, DomainError
from .quadrature import adaptive_panels, gauss_legendre

TWO_PI = 2.0 * math.pi
_BOUNDARY_TOL = 1e-12


def as_point(p) -> np.ndarray:
    p = np.asarray(p, dtype=float).reshape(-1)
    if p.shape != (2,):
        raise DomainError(f"expected a 2-D point, got {p!r}")
    return p


# ---------------------------------------------------------------------------
# Angular densities
# ---------------------------------------------------------------------------

class AngularDensity:
    """Normalised wedge-area density on the circle of directions about an anchor.

    Subclasses implement ``_f`` and ``_cum`` on ``[0, 2*pi]``; the public
    methods handle periodicity.  ``cumulative`` is unwrapped, so
    ``cumulative(t + 2*pi) == cumulative(t) + 1``.
    """

    def __init__(self, breakpoints, total_area: float):
        bp = np.mod(np.asarray(breakpoints, dtype=float).reshape(-1), TWO_PI)
        self.breakpoints = np.unique(bp)
        self.total_area = float(total_area)

    def __call__(self, theta):
        return self._f(np.mod(np.asarray(theta, dtype=float), TWO_PI))

    def cumulative(self, theta):
        theta = np.asarray(theta, dtype=float)
        turns = np.floor(theta / TWO_PI)
        t = np.clip(theta - turns * TWO_PI, 0.0, TWO_PI)
        return turns + self._cum(t)

    def half_mass(self, theta):
        """Area fraction in the half-plane swept counterclockwise from ``theta`` to ``theta + pi``."""
        theta = np.asarray(theta, dtype=float)
        return self.cumulative(theta + math.pi) - self.cumulative(theta)

    def rotated(self, shift: float) -> "AngularDensity":
        """The density ``theta -> f(theta + shift)``."""
        return _RotatedDensity(self, shift)

    def _f(self, t):  # pragma: no cover - abstract
        raise NotImplementedError

    def _cum(self, t):  # pragma: no cover - abstract
        raise NotImplementedError


class QuadratureDensity(AngularDensity):
    """Density from a vectorised unnormalised callable ``raw(theta)``.

    The cumulative mass is tabulated on panels refined until the 16-point
    rule is accurate to ``rtol`` relative to the total, then evaluated inside
    a panel with the same rule on the partial interval.
    """

    def __init__(self, raw: Callable, breakpoints=(), rtol: float = 1e-14,
                 max_panels: int = 20_000):
        bp = np.mod(np.asarray(breakpoints, dtype=float).reshape(-1), TWO_PI)
        edges = np.unique(np.concatenate([bp, np.linspace(0.0, TWO_PI, 9)]))
        rough = float(np.sum(gauss_legendre(raw, edges[:-1], edges[1:])))
        if not (np.isfinite(rough) and rough > 0.0):
            raise DegenerateRegion("region has zero area seen from the anchor")
        panels = adaptive_panels(raw, edges, tol=rtol * rough, max_panels=max_panels)
        cum = np.concatenate([[0.0], np.cumsum(panels.value)])
        area = panels.total
        if not area > 0.0:
            raise DegenerateRegion("region has zero area seen from the anchor")
        super().__init__(bp, area)
        self._raw = raw
        self._lo = panels.lo
        self._cum0 = cum / cum[-1]
        self._scale = 1.0 / cum[-1]

    def _f(self, t):
        return self._raw(t) * self._scale

    def _cum(self, t):
        k = np.clip(np.searchsorted(self._lo, t, side="right") - 1, 0, self._lo.size - 1)
        lo = self._lo[k]
        return self._cum0[k] + gauss_legendre(self._raw, lo, t) * self._scale


class PolygonDensity(AngularDensity):
    """Exact density of a simple polygon about an arbitrary anchor in its closure.

    Every edge not collinear with the anchor sweeps an angular span of less
    than ``pi`` on which it lies at distance ``d / cos(theta - phi)``.  Edges
    running counterclockwise about the anchor are exit crossings and add
    ``r**2 / 2``; clockwise ones are entry crossings and subtract it.  The
    antiderivative ``d**2 tan(theta - phi) / 2`` gives the cumulative mass.
    """

    def __init__(self, vertices, anchor):
        q = np.asarray(vertices, dtype=float) - as_point(anchor)
        nxt = np.roll(q, -1, axis=0)
        cross = q[:, 0] * nxt[:, 1] - q[:, 1] * nxt[:, 0]
        dot = np.einsum("ij,ij->i", q, nxt)
        scale = max(float(np.abs(q).max()), 1e-300)
        keep = np.abs(cross) > 1e-14 * scale * scale
        q, nxt, cross, dot = q[keep], nxt[keep], cross[keep], dot[keep]
        if q.shape[0] == 0:
            raise DegenerateRegion("polygon has zero area")

        delta = np.arctan2(cross, dot)
        ang_q = np.mod(np.arctan2(q[:, 1], q[:, 0]), TWO_PI)
        ang_n = np.mod(np.arctan2(nxt[:, 1], nxt[:, 0]), TWO_PI)
        start = np.where(delta > 0, ang_q, ang_n)
        length = np.abs(delta)
        sign = np.sign(delta)
        edge = nxt - q
        edge_len2 = np.einsum("ij,ij->i", edge, edge)
        dist2 = cross * cross / edge_len2
        foot = q - (np.einsum("ij,ij->i", q, edge) / edge_len2)[:, None] * edge
        phi = np.arctan2(foot[:, 1], foot[:, 0])

        end = np.mod(start + length, TWO_PI)
        cuts = np.unique(np.concatenate([[0.0, TWO_PI], start, end]))
        n_int = cuts.size - 1
        active: list[list[int]] = [[] for _ in range(n_int)]
        i0 = np.searchsorted(cuts, start)
        i1 = np.searchsorted(cuts, end)
        wraps = start + length >= TWO_PI
        for e in range(start.size):
            if wraps[e]:
                span = list(range(i0[e], n_int)) + list(range(0, i1[e]))
            else:
                span = range(i0[e], i1[e])
            for j in span:
                active[j].append(e)

        width = max(1, max(len(a) for a in active))
        idx = np.zeros((n_int, width), dtype=int)
        mask = np.zeros((n_int, width))
        for j, a in enumerate(active):
            idx[j, :len(a)] = a
            mask[j, :len(a)] = 1.0
        self._cuts = cuts
        self._coef = mask * sign[idx] * dist2[idx] / 2.0
        self._phi = phi[idx]

        tan_hi = np.tan(cuts[1:, None] - self._phi)
        tan_lo = np.tan(cuts[:-1, None] - self._phi)
        mass = np.sum(self._coef * (tan_hi - tan_lo), axis=1)
        cum = np.concatenate([[0.0], np.cumsum(mass)])
        if not cum[-1] > 0.0:
            raise DegenerateRegion("polygon has zero area")
        super().__init__(np.concatenate([start, end]), cum[-1])
        self._cum0 = cum / cum[-1]
        self._tan_lo = tan_lo
        self._scale = 1.0 / cum[-1]

    def _interval(self, t):
        return np.clip(np.searchsorted(self._cuts, t, side="right") - 1,
                       0, self._cuts.size - 2)

    def _f(self, t):
        j = self._interval(t)
        c = np.cos(t[..., None] - self._phi[j])
        return np.sum(self._coef[j] / (c * c), axis=-1) * self._scale

    def _cum(self, t):
        j = self._interval(t)
        tan_t = np.tan(t[..., None] - self._phi[j])
        partial = np.sum(self._coef[j] * (tan_t - self._tan_lo[j]), axis=-1)
        return self._cum0[j] + partial * self._scale


class _RotatedDensity(AngularDensity):
    def __init__(self, base: AngularDensity, shift: float):
        super().__init__(np.asarray(base.breakpoints) - shift, base.total_area)
        self._base = base
        self._shift = float(shift)
        self._offset = float(base.cumulative(self._shift))

    def _f(self, t):
        return self._base(t + self._shift)

    def _cum(self, t):
        return self._base.cumulative(t + self._shift) - self._offset


# ---------------------------------------------------------------------------
# Regions
# ---------------------------------------------------------------------------

class Region:
    """Common interface; concrete regions are frozen dataclasses below."""

    kind = "region"

    def area(self) -> float:
        raise NotImplementedError

    def contains(self, points) -> np.ndarray:
        """Closed-region membership for an ``(..., 2)`` array of points."""
        raise NotImplementedError

    def bounding_box(self) -> tuple[float, float, float, float]:
        raise NotImplementedError

    @property
    def default_anchor(self) -> np.ndarray:
        raise NotImplementedError

    def radial_slices(self, anchor, theta: float) -> list[tuple[float, float]]:
        raise NotImplementedError

    def angular_density(self, anchor) -> AngularDensity:
        raise NotImplementedError

    def _check_anchor(self, anchor) -> np.ndarray:
        o = as_point(anchor)
        if not bool(self.contains(o)):
            raise DomainError(f"anchor {tuple(float(c) for c in o)} is not in the closed region")
        return o


def _segment_distance(points, a, b):
    """Distance from each point to each segment ``a[k] -> b[k]``; shape ``(..., k)``."""
    p = points[..., None, :]
    ab = b - a
    t = np.einsum("...kj,kj->...k", p - a, ab) / np.einsum("kj,kj->k", ab, ab)
    t = np.clip(t, 0.0, 1.0)
    closest = a + t[..., None] * ab
    return np.linalg.norm(p - closest, axis=-1)


def _segments_cross(a, b, c, d) -> bool:
    def orient(p, q, r):
        return np.sign((q[..., 0] - p[..., 0]) * (r[..., 1] - p[..., 1])
                       - (q[..., 1] - p[..., 1]) * (r[..., 0] - p[..., 0]))
    return (orient(a, b, c) * orient(a, b, d) < 0) & (orient(c, d, a) * orient(c, d, b) < 0)


@dataclass(frozen=True, eq=False)
class Polygon(Region):
    """Simple polygon; vertices are stored counterclockwise."""

    vertices: np.ndarray
    validate: bool = field(default=True, repr=False)
    kind = "polygon"

    def __post_init__(self):
        v = np.asarray(self.vertices, dtype=float).reshape(-1, 2)
        if v.shape[0] >= 2 and np.allclose(v[0], v[-1]):
            v = v[:-1]
        if v.shape[0] < 3:
            raise DegenerateRegion("a polygon needs at least three vertices")
        signed = _shoelace(v)
        if not np.isfinite(signed) or abs(signed) <= 1e-300:
            raise DegenerateRegion("polygon has zero area")
        if signed < 0:
            v = v[::-1].copy()
        v.setflags(write=False)
        object.__setattr__(self, "vertices", v)
        if self.validate and not self._is_simple():
            raise DomainError("polygon edges intersect (not simple)")

    def _is_simple(self) -> bool:
        v = self.vertices
        n = v.shape[0]
        if n < 4 or n > 2000:
            return True
        a, b = v, np.roll(v, -1, axis=0)
        i, j = np.triu_indices(n, k=2)
        keep = ~((i == 0) & (j == n - 1))
        i, j = i[keep], j[keep]
        return not np.any(_segments_cross(a[i], b[i], a[j], b[j]))

    def area(self) -> float:
        return _shoelace(self.vertices)

    @property
    def default_anchor(self) -> np.ndarray:
        v = self.vertices
        w = np.roll(v, -1, axis=0)
        c = v[:, 0] * w[:, 1] - w[:, 0] * v[:, 1]
        a = c.sum() / 2.0
        return np.array([((v[:, 0] + w[:, 0]) * c).sum(),
                         ((v[:, 1] + w[:, 1]) * c).sum()]) / (6.0 * a)

    def bounding_box(self):
        lo = self.vertices.min(axis=0)
        hi = self.vertices.max(axis=0)
        return float(lo[0]), float(lo[1]), float(hi[0]), float(hi[1])

    def contains(self, points) -> np.ndarray:
        pts = np.asarray(points, dtype=float)
        x, y = pts[..., 0], pts[..., 1]
        v = self.vertices
        inside = np.zeros(x.shape, dtype=bool)
        for (x0, y0), (x1, y1) in zip(v, np.roll(v, -1, axis=0)):
            crosses = (y0 > y) != (y1 > y)
            with np.errstate(divide="ignore", invalid="ignore", over="ignore"):
                xc = x0 + (y - y0) * (x1 - x0) / (y1 - y0)
            inside ^= crosses & (x < xc)
        if pts.ndim == 1 or pts.shape[0] <= 64:
            lo, hi = self.vertices.min(axis=0), self.vertices.max(axis=0)
            tol = _BOUNDARY_TOL * float(np.max(hi - lo))
            dist = _segment_distance(pts, v, np.roll(v, -1, axis=0))
            inside |= np.min(dist, axis=-1) <= tol
        return inside

    def radial_slices(self, anchor, theta: float):
        dens = self.angular_density(anchor)
        t = float(np.mod(theta, TWO_PI))
        j = int(dens._interval(np.array(t)))
        hits = []
        for coef, phi in zip(dens._coef[j], dens._phi[j]):
            if coef == 0.0:
                continue
            r = math.sqrt(2.0 * abs(coef)) / math.cos(t - phi)
            hits.append((r, coef > 0))
        hits.sort()
        out, begin = [], 0.0
        for r, is_exit in hits:
            if is_exit:
                if r > begin:
                    out.append((begin, r))
            else:
                begin = r
        return out

    def angular_density(self, anchor) -> AngularDensity:
        return PolygonDensity(self.vertices, self._check_anchor(anchor))


def _shoelace(v) -> float:
    w = np.roll(v, -1, axis=0)
    return 0.5 * float(np.sum(v[:, 0] * w[:, 1] - w[:, 0] * v[:, 1]))


@dataclass(frozen=True, eq=False)
class Disk(Region):
    """Disk of the given radius; any anchor in the closed disk is supported."""

    radius: float = 1.0
    center: tuple = (0.0, 0.0)
    kind = "disk"

    def __post_init__(self):
        if not (np.isfinite(self.radius) and self.radius > 0):
            raise DegenerateRegion("disk radius must be positive")
        object.__setattr__(self, "center", tuple(float(c) for c in as_point(self.center)))

    def area(self) -> float:
        return math.pi * self.radius ** 2

    @property
    def default_anchor(self) -> np.ndarray:
        return np.array(self.center)

    def bounding_box(self):
        cx, cy = self.center
        r = self.radius
        return cx - r, cy - r, cx + r, cy + r

    def contains(self, points) -> np.ndarray:
        d = np.asarray(points, dtype=float) - np.array(self.center)
        return np.einsum("...i,...i->...", d, d) <= (self.radius * (1.0 + _BOUNDARY_TOL)) ** 2

    def _chord(self, anchor):
        q = anchor - np.array(self.center)
        c = min(0.0, float(q @ q) - self.radius ** 2)

        def rho(t):
            b = q[0] * np.cos(t) + q[1] * np.sin(t)
            # stable root of rho**2 + 2 b rho + c = 0
            s = np.sqrt(b * b - c)
            with np.errstate(divide="ignore", invalid="ignore"):
                return np.where(b < 0, s - b, np.where(s + b > 0, -c / (s + b), 0.0))
        return rho

    def radial_slices(self, anchor, theta: float):
        r = float(self._chord(self._check_anchor(anchor))(float(theta)))
        return [(0.0, r)] if r > 0 else []

    def angular_density(self, anchor) -> AngularDensity:
        rho = self._chord(self._check_anchor(anchor))
        return QuadratureDensity(lambda t: 0.5 * rho(t) ** 2)


@dataclass(frozen=True, eq=False)
class OffsetDisk(Disk):
    """Unit-area disk whose default anchor sits at fraction ``r`` of the radius from the center."""

    radius: float = 1.0 / math.sqrt(math.pi)
    r: float = 0.0
    kind = "offset_disk"

    def __post_init__(self):
        if not 0.0 <= self.r < 1.0:
            raise DomainError("offset fraction r must lie in [0, 1)")
        super().__post_init__()

    @property
    def default_anchor(self) -> np.ndarray:
        return np.array(self.center) + np.array([self.r * self.radius, 0.0])


@dataclass(frozen=True, eq=False)
class DiskSlice(Region):
    """Disk with the wedge ``|theta| < pi * a`` removed, anchored at the center.

    ``a = 0`` is the full disk and ``a = 1/2`` a half-disk.  The radius
    defaults to the value giving unit area.
    """

    a: float = 0.0
    radius: Optional[float] = None
    kind = "disk_slice"

    def __post_init__(self):
        if not 0.0 <= self.a <= 0.5:
            raise DomainError("slice fraction a must lie in [0, 1/2]")
        if self.radius is None:
            object.__setattr__(self, "radius", 1.0 / math.sqrt(math.pi * (1.0 - self.a)))

    def area(self) -> float:
        return math.pi * (1.0 - self.a) * self.radius ** 2

    @property
    def default_anchor(self) -> np.ndarray:
        return np.zeros(2)

    def bounding_box(self):
        r = self.radius
        return -r, -r, r, r

    def contains(self, points) -> np.ndarray:
        p = np.asarray(points, dtype=float)
        rho = np.hypot(p[..., 0], p[..., 1])
        ang = np.abs(np.arctan2(p[..., 1], p[..., 0]))
        return (rho <= self.radius * (1 + _BOUNDARY_TOL)) & (
            (ang >= math.pi * self.a - 1e-12) | (rho <= _BOUNDARY_TOL * self.radius))

    def _require_center(self, anchor):
        o = as_point(anchor)
        if np.hypot(*o) > _BOUNDARY_TOL * self.radius:
            raise DomainError("a sliced disk is only supported with the anchor at its center")

    def _raw(self, t):
        w = np.abs(np.mod(t + math.pi, TWO_PI) - math.pi)
        return np.where(w >= math.pi * self.a, 0.5 * self.radius ** 2, 0.0)

    def radial_slices(self, anchor, theta: float):
        self._require_center(anchor)
        return [(0.0, self.radius)] if self._raw(float(theta)) > 0 else []

    def angular_density(self, anchor) -> AngularDensity:
        self._require_center(anchor)
        bp = [math.pi * self.a, TWO_PI - math.pi * self.a]
        return QuadratureDensity(self._raw, bp)


def _sampled_extent(radii) -> float:
    return 1.01 * float(np.max(radii))


@dataclass(frozen=True, eq=False)
class PolarGraph(Region):
    """Region ``{center + rho e(theta) : 0 <= rho <= radius(theta)}``.

    ``radius`` must be vectorised and ``2*pi``-periodic.  With the anchor at
    the center the density is ``radius**2 / 2`` exactly; other anchors go
    through a fine polygonal approximation of the boundary curve.
    """

    radius: Callable
    breakpoints: tuple = ()
    center: tuple = (0.0, 0.0)
    label: str = "polar"
    polygon_resolution: int = 4096
    kind = "polar"

    def __post_init__(self):
        object.__setattr__(self, "center", tuple(float(c) for c in as_point(self.center)))
        object.__setattr__(self, "breakpoints", tuple(float(b) for b in self.breakpoints))
        grid = np.linspace(0.0, TWO_PI, 2048, endpoint=False)
        if np.any(self.radius(grid) < 0):
            raise DomainError("polar radius must be non-negative")

    def _raw(self, t):
        r = self.radius(t)
        return 0.5 * r * r

    @cached_property
    def _center_density(self) -> QuadratureDensity:
        return QuadratureDensity(self._raw, self.breakpoints)

    def area(self) -> float:
        return self._center_density.total_area

    @property
    def default_anchor(self) -> np.ndarray:
        return np.array(self.center)

    @cached_property
    def _extent(self) -> float:
        t = np.linspace(0.0, TWO_PI, 4096, endpoint=False)
        return _sampled_extent(self.radius(t))

    def bounding_box(self):
        ext = self._extent
        cx, cy = self.center
        return cx - ext, cy - ext, cx + ext, cy + ext

    def contains(self, points) -> np.ndarray:
        d = np.asarray(points, dtype=float) - np.array(self.center)
        rho = np.hypot(d[..., 0], d[..., 1])
        bound = self.radius(np.arctan2(d[..., 1], d[..., 0]))
        return rho <= bound * (1 + _BOUNDARY_TOL) + _BOUNDARY_TOL

    def _at_center(self, anchor) -> bool:
        o = as_point(anchor)
        return bool(np.hypot(*(o - np.array(self.center))) <= 1e-15)

    def to_polygon(self, n: Optional[int] = None) -> Polygon:
        n = n or self.polygon_resolution
        t = np.unique(np.concatenate([np.linspace(0.0, TWO_PI, n, endpoint=False),
                                      np.mod(self.breakpoints, TWO_PI)]))
        r = self.radius(t)
        pts = np.array(self.center) + r[:, None] * np.column_stack([np.cos(t), np.sin(t)])
        step = np.linalg.norm(np.diff(pts, axis=0, append=pts[:1]), axis=1)
        return Polygon(pts[step > 0], validate=False)

    def radial_slices(self, anchor, theta: float):
        if self._at_center(anchor):
            r = float(self.radius(float(theta)))
            return [(0.0, r)] if r > 0 else []
        return self.to_polygon().radial_slices(self._check_anchor(anchor), theta)

    def angular_density(self, anchor) -> AngularDensity:
        if self._at_center(anchor):
            return self._center_density
        return self.to_polygon().angular_density(self._check_anchor(anchor))


@dataclass(frozen=True, eq=False)
class RadialSlices(Region):
    """Region described ray by ray from its center.

    ``slices(theta)`` returns the sorted disjoint intervals ``[(r_in, r_out), ...]``
    cut from the ray at angle ``theta``.  ``indicator`` is an optional
    vectorised membership test on absolute coordinates used for sampling.
    Only the center is supported as anchor.
    """

    slices: Callable
    breakpoints: tuple = ()
    center: tuple = (0.0, 0.0)
    indicator: Optional[Callable] = None
    label: str = "slices"
    kind = "slices"

    def __post_init__(self):
        object.__setattr__(self, "center", tuple(float(c) for c in as_point(self.center)))
        object.__setattr__(self, "breakpoints", tuple(float(b) for b in self.breakpoints))

    def _intervals(self, theta: float):
        out = []
        for r_in, r_out in self.slices(float(theta)):
            if r_in < 0 or r_out < r_in:
                raise DomainError(f"bad radial interval {(r_in, r_out)} at theta={theta}")
            if out and r_in < out[-1][1]:
                raise DomainError("radial intervals must be disjoint and sorted")
            if r_out > r_in:
                out.append((float(r_in), float(r_out)))
        return out

    def _raw(self, t):
        t = np.asarray(t, dtype=float)
        flat = [sum(b * b - a * a for a, b in self._intervals(x)) * 0.5 for x in t.reshape(-1)]
        return np.array(flat).reshape(t.shape)

    @cached_property
    def _center_density(self) -> QuadratureDensity:
        return QuadratureDensity(self._raw, self.breakpoints)

    def area(self) -> float:
        return self._center_density.total_area

    @property
    def default_anchor(self) -> np.ndarray:
        return np.array(self.center)

    @cached_property
    def _extent(self) -> float:
        t = np.linspace(0.0, TWO_PI, 2048, endpoint=False)
        return _sampled_extent([max([b for _, b in self._intervals(x)], default=0.0) for x in t])

    def bounding_box(self):
        ext = self._extent
        cx, cy = self.center
        return cx - ext, cy - ext, cx + ext, cy + ext

    def contains(self, points) -> np.ndarray:
        p = np.asarray(points, dtype=float)
        if self.indicator is not None:
            return np.asarray(self.indicator(p[..., 0], p[..., 1]), dtype=bool)
        d = p - np.array(self.center)
        rho = np.hypot(d[..., 0], d[..., 1])
        ang = np.arctan2(d[..., 1], d[..., 0])
        flat = [any(a - 1e-12 <= r <= b + 1e-12 for a, b in self._intervals(t)) or r == 0.0
                for r, t in zip(rho.reshape(-1), ang.reshape(-1))]
        return np.array(flat, dtype=bool).reshape(rho.shape)

    def _require_center(self, anchor):
        o = as_point(anchor)
        if np.hypot(*(o - np.array(self.center))) > 1e-15:
            raise DomainError("radial-slice regions only support the anchor at their center")

    def radial_slices(self, anchor, theta: float):
        self._require_center(anchor)
        return self._intervals(theta)

    def angular_density(self, anchor) -> AngularDensity:
        self._require_center(anchor)
        return self._center_density


# ---------------------------------------------------------------------------
# Module-level operations
# ---------------------------------------------------------------------------

def area(region: Region) -> float:
    """Lebesgue area of the region."""
    a = float(region.area())
    if not (np.isfinite(a) and a > 0):
        raise DegenerateRegion("region has zero area")
    return a


def radial_slices_at(region: Region, anchor, theta: float) -> list[tuple[float, float]]:
    """Intervals ``[r_in, r_out]`` cut by the ray from ``anchor`` at angle ``theta``."""
    return region.radial_slices(anchor, float(np.mod(theta, TWO_PI)))


def angular_density(region: Region, anchor=None) -> AngularDensity:
    """Normalised angular density of ``region`` about ``anchor`` (default: the region's own)."""
    if anchor is None:
        anchor = region.default_anchor
    return region.angular_density(as_point(anchor))


# ---------------------------------------------------------------------------
# Named regions
# ---------------------------------------------------------------------------

def limacon(a: float) -> PolarGraph:
    """Unit-area limacon ``r = c (a + cos theta)`` about its pole; ``a = 1`` is the cardioid."""
    a = float(a)
    if a < 1.0:
        raise DomainError("limacon parameter must satisfy a >= 1")
    c = math.sqrt(2.0 / ((2.0 * a * a + 1.0) * math.pi))
    return PolarGraph(lambda t: c * (a + np.cos(t)), label=f"limacon(a={a!r})")


def cardioid() -> PolarGraph:
    return limacon(1.0)


def crescent() -> RadialSlices:
    """The crescent ``x <= x**2 + y**2 <= 1`` anchored at the origin (on its boundary)."""

    def slices(t):
        c = math.cos(t)
        return [(c, 1.0)] if c > 0 else [(0.0, 1.0)]

    def indicator(x, y):
        s = x * x + y * y
        return (x <= s) & (s <= 1.0)

    return RadialSlices(slices, breakpoints=(math.pi / 2, 3 * math.pi / 2),
                        indicator=indicator, label="crescent")


def annulus(inner: float, outer: float) -> RadialSlices:
    if not 0.0 <= inner < outer:
        raise DomainError("annulus needs 0 <= inner < outer")

    def indicator(x, y):
        s = np.hypot(x, y)
        return (s >= inner) & (s <= outer)

    return RadialSlices(lambda t: [(inner, outer)], indicator=indicator,
                        label=f"annulus({inner!r},{outer!r})")


def unit_square() -> Polygon:
    return Polygon([(0, 0), (1, 0), (1, 1), (0, 1)])


def regular_polygon(n: int, area: float = 1.0, center=(0.0, 0.0),
                    phase: float = 0.0) -> Polygon:
    """Regular ``n``-gon of the given area with a vertex at angle ``phase``."""
    if n < 3:
        raise DomainError("a regular polygon needs n >= 3")
    R = math.sqrt(2.0 * area / (n * math.sin(TWO_PI / n)))
    t = phase + TWO_PI * np.arange(n) / n
    return Polygon(np.asarray(center, dtype=float) + R * np.column_stack([np.cos(t), np.sin(t)]))


def equilateral_triangle(area: float = 1.0) -> Polygon:
    """Equilateral triangle with vertices ``(-s, 0)``, ``(s, 0)``, ``(0, s*sqrt(3))``."""
    s = math.sqrt(area / math.sqrt(3.0))
    return Polygon([(-s, 0.0), (s, 0.0), (0.0, s * math.sqrt(3.0))])


def barycentric_coordinates(triangle, point) -> np.ndarray:
    """Areal coordinates ``(alpha, beta, gamma)`` of ``point`` w.r.t. vertices ``A, B, C``."""
    A, B, C = np.asarray(triangle, dtype=float).reshape(3, 2)
    p = as_point(point)

    def tri(u, v, w):
        return (v[0] - u[0]) * (w[1] - u[1]) - (v[1] - u[1]) * (w[0] - u[0])

    total = tri(A, B, C)
    if total == 0:
        raise DegenerateRegion("triangle has zero area")
    return np.array([tri(p, B, C), tri(A, p, C), tri(A, B, p)]) / total


def point_from_barycentric(triangle, coords: Sequence[float]) -> np.ndarray:
    V = np.asarray(triangle, dtype=float).reshape(3, 2)
    w = np.asarray(coords, dtype=float)
    return w @ V
