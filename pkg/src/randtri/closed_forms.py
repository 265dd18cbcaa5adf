"""Exact and one-dimensional-integral evaluators for the worked region families.

These are independent of the angular-density machinery and serve as ground
truth for it.  Where a family is given by a one-dimensional integral the
integral is done with ``scipy.integrate.quad``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple

import mpmath
import numpy as np
from scipy import integrate

from .errors import DomainError, QuadratureError
from .region import barycentric_coordinates

_QUAD = dict(epsabs=1e-13, epsrel=1e-13, limit=200)


def _quad(func, a, b, **kw):
    opts = dict(_QUAD)
    opts.update(kw)
    value, err = integrate.quad(func, a, b, **opts)
    if not np.isfinite(value):
        raise QuadratureError("non-finite integral")
    return value


# -- limacons ---------------------------------------------------------------

def limacon_probability(a: float) -> float:
    """Unit-area limacon ``r ~ a + cos(theta)`` with the anchor at the pole; ``a >= 1``."""
    if not a >= 1.0:
        raise DomainError("limacon parameter must satisfy a >= 1")
    a2 = a * a
    return 0.25 - 12.0 * a2 * (4.0 * a2 + 1.0) / ((2.0 * a2 + 1.0) ** 3 * math.pi ** 2)


def limacon_min_half_mass(a: float) -> float:
    if not a >= 1.0:
        raise DomainError("limacon parameter must satisfy a >= 1")
    return 0.5 - 4.0 * a / ((2.0 * a * a + 1.0) * math.pi)


# -- regular polygons -------------------------------------------------------

def regular_polygon_probability(m: int) -> float:
    """Regular polygon with ``2m + 1`` vertices, anchor at its center.

    The closed form cancels catastrophically as ``m`` grows (the deficit from
    1/4 is of order ``m**-6``), so it is evaluated in extended precision.
    """
    m = int(m)
    if m < 1:
        raise DomainError("m must be at least 1")
    n = 2 * m + 1
    lost = 5 * max(0.0, -math.log10(math.sin(math.pi / n) ** 2))
    with mpmath.workdps(int(30 + lost)):
        a = mpmath.cos(mpmath.pi / n) ** 2
        num = 1 + 9 * a - 9 * a ** 2 - a ** 3 + 6 * a * (1 + a) * mpmath.log(a)
        p = mpmath.mpf(1) / 4 - num / (4 * n ** 2 * (1 - a) ** 3)
        return float(p)


# -- triangles --------------------------------------------------------------

@dataclass(frozen=True)
class BarycentricPoint:
    alpha: float
    beta: float
    gamma: float

    def __post_init__(self):
        c = (self.alpha, self.beta, self.gamma)
        if any(not np.isfinite(x) or x < 0.0 or x > 1.0 for x in c):
            raise DomainError(f"barycentric coordinates must lie in [0, 1], got {c}")
        if abs(sum(c) - 1.0) > 1e-12:
            raise DomainError(f"barycentric coordinates must sum to 1, got {sum(c)!r}")

    @classmethod
    def from_triangle(cls, triangle, point) -> "BarycentricPoint":
        a, b, g = barycentric_coordinates(triangle, point)
        return cls(float(a), float(b), float(g))

    def __iter__(self):
        return iter((self.alpha, self.beta, self.gamma))


def _triangle_antiderivative(alpha, gamma, u):
    # integrand (alpha+u)^2/u - gamma (alpha+u)^4/u^2, log terms split off by the caller
    return (2 * alpha * u + u * u / 2
            - gamma * (-alpha ** 4 / u + 6 * alpha ** 2 * u + 2 * alpha * u * u + u ** 3 / 3))


def triangle_integral(alpha: float, gamma: float, method: str = "closed") -> float:
    """``gamma**2 * int_L^U ((alpha+u)**2/u - gamma*(alpha+u)**4/u**2) du``.

    ``L = alpha*gamma/(1-gamma)`` and ``U = 1 - alpha``.  ``method`` is
    ``"closed"`` (antiderivative) or ``"quadrature"``.
    """
    lo = alpha * gamma / (1.0 - gamma)
    hi = 1.0 - alpha
    if method == "quadrature":
        def g(u):
            s = alpha + u
            return s * s / u - gamma * s ** 4 / (u * u)
        return gamma * gamma * _quad(g, lo, hi)
    if method != "closed":
        raise ValueError(f"unknown method {method!r}")
    if alpha == 0.0:
        poly = hi * hi / 2 - gamma * hi ** 3 / 3
        return gamma * gamma * poly
    logs = (alpha * alpha - 4.0 * gamma * alpha ** 3) * math.log(hi / lo)
    poly = _triangle_antiderivative(alpha, gamma, hi) - _triangle_antiderivative(alpha, gamma, lo)
    return gamma * gamma * (logs + poly)


def triangle_probability(p, method: str = "closed") -> float:
    """Any triangle, anchor with barycentric coordinates ``p``; depends only on ``p``.

    A zero coordinate puts the anchor on an edge, where the probability
    tends to 0.
    """
    if not isinstance(p, BarycentricPoint):
        p = BarycentricPoint(*p)
    a, b, g = p
    if min(a, b, g) == 0.0:
        return 0.0
    total = (triangle_integral(a, g, method) + triangle_integral(b, g, method)
             + triangle_integral(b, a, method))
    return 6.0 * total - g * g * (3.0 - 3.0 * a - 2.0 * g) / (1.0 - a) ** 3


# -- squares ----------------------------------------------------------------

def _square_reduced(u: float, v: float) -> float:
    # 0 < v <= u <= 1/2
    b1 = (u - v) / (1 - v)
    b2 = u / (1 - v)

    def i1(x):
        h = v * (1 - x) ** 2 / (2 * (u - x))
        return v / 2 * h * (1 - h)

    def i2(x):
        h = (2 * v * x + u - x) / (2 * v)
        return v / 2 * h * (1 - h)

    def i3(x):
        h = v * x * x / (2 * (x - u))
        return v / 2 * h * (1 - h)

    def i4(y):
        h = (v + y * (1 - 2 * u)) / (2 * (1 - u))
        return (1 - u) / 2 * h * (1 - h)

    parts = [_quad(i1, 0.0, b1) if b1 > 0 else 0.0,
             _quad(i2, b1, b2), _quad(i3, b2, 1.0), _quad(i4, 0.0, v / u)]
    return 6.0 * math.fsum(parts) - v * v * (3 * u - v) / (4 * u ** 3)


def square_probability(u: float, v: float) -> float:
    """Unit square ``[0,1]**2`` with the anchor at ``(u, v)``.

    Reduced by the square's symmetries to ``0 < v <= u <= 1/2``; the four
    boundary-segment integrals are evaluated numerically.  Anchors on the
    boundary give the limiting value 0.
    """
    if not (0.0 <= u <= 1.0 and 0.0 <= v <= 1.0):
        raise DomainError(f"anchor ({u}, {v}) lies outside the unit square")
    if u in (0.0, 1.0) or v in (0.0, 1.0):
        return 0.0
    u, v = min(u, 1.0 - u), min(v, 1.0 - v)
    if v > u:
        u, v = v, u
    return _square_reduced(u, v)


def square_diagonal_probability(u: float) -> float:
    """Unit square with the anchor at ``(u, u)``, ``0 < u <= 1/2``."""
    if not 0.0 < u <= 0.5:
        raise DomainError("u must lie in (0, 1/2]")
    head = (1 - 2 * u) * (1 - 2 * u * u) * (1 + u - 6 * u ** 3) / (4 * (1 - u))
    return 0.25 - head + 3 * u ** 4 * (1 - 2 * u * u) * math.log((1 - u) / u)


# -- disks ------------------------------------------------------------------

def slice_disk_probability(a: float) -> float:
    """Disk missing the wedge ``|theta| < pi*a``, anchor at the center; ``a`` in ``[0, 1/2]``."""
    if not 0.0 <= a <= 0.5:
        raise DomainError("a must lie in [0, 1/2]")
    return (1 + a) * (1 - 2 * a) ** 2 / (4 * (1 - a) ** 3)


def _offset_disk(r: float, tol: float) -> float:
    if r == 0.0:
        return 0.25

    def g(t):
        c, s = math.cos(t), math.sin(t)
        q = 1 - 2 * r * c + r * r
        x = min(1.0, max(-1.0, r * s / math.sqrt(q)))
        w = 0.5 - math.acos(x) / math.pi + r * (1 - r * c) * s / (math.pi * q)
        return w * w * (1 - r * c)

    return 0.25 - 3.0 / math.pi * _quad(g, 0.0, math.pi, epsabs=tol, epsrel=tol)


def offset_disk_probability(r: float) -> float:
    """Disk with the anchor at fraction ``r`` of the radius from the center, ``0 <= r < 1``."""
    if not 0.0 <= r < 1.0:
        raise DomainError("r must lie in [0, 1)")
    return _offset_disk(r, 1e-12)


class DiskAverage(NamedTuple):
    value: float
    reference: float


def offset_disk_average() -> DiskAverage:
    """Area average of the off-center disk probability over anchors in the disk.

    Equals the probability that the first of four uniform points in a disk
    falls inside the triangle of the other three.
    """
    value = 2.0 * _quad(lambda r: _offset_disk(r, 1e-11) * r, 0.0, 1.0,
                        epsabs=1e-11, epsrel=1e-11)
    return DiskAverage(value, 35.0 / (48.0 * math.pi ** 2))
