import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from randtri import region as rg
from randtri.errors import DegenerateRegion, DomainError
from randtri.quadrature import integrate

TWO_PI = 2 * math.pi


def _edges(f):
    return np.unique(np.concatenate([np.linspace(0, TWO_PI, 9), np.mod(f.breakpoints, TWO_PI)]))


def _uniform(region, n, rng):
    x0, y0, x1, y1 = region.bounding_box()
    out = []
    while sum(len(o) for o in out) < n:
        p = np.column_stack([rng.uniform(x0, x1, 4 * n), rng.uniform(y0, y1, 4 * n)])
        out.append(p[region.contains(p)])
    return np.concatenate(out)[:n]


# -- the density as a probability measure ------------------------------------

def test_density_integrates_to_one(registered):
    _, region, anchor, _ = registered
    f = rg.angular_density(region, anchor)
    assert abs(integrate(f, _edges(f), tol=1e-12).value - 1.0) < 1e-9
    assert abs(f.cumulative(TWO_PI) - f.cumulative(0.0) - 1.0) < 1e-12


def test_cumulative_is_unwrapped(registered):
    _, region, anchor, _ = registered
    f = rg.angular_density(region, anchor)
    t = np.linspace(0.0, TWO_PI, 37)
    np.testing.assert_allclose(f.cumulative(t + TWO_PI), f.cumulative(t) + 1.0, atol=1e-12)
    assert np.all(np.diff(f.cumulative(np.linspace(0, TWO_PI, 400))) >= -1e-14)


def test_half_turn_masses_complement(registered):
    _, region, anchor, _ = registered
    f = rg.angular_density(region, anchor)
    t = np.linspace(0.0, TWO_PI, 101)
    np.testing.assert_allclose(f.half_mass(t) + f.half_mass(t + math.pi), 1.0, atol=1e-10)


def test_half_mass_derivative(registered):
    _, region, anchor, _ = registered
    f = rg.angular_density(region, anchor)
    kinks = np.mod(np.concatenate([f.breakpoints, np.asarray(f.breakpoints) + math.pi]), TWO_PI)
    step = 1e-6
    for t in np.linspace(0.05, TWO_PI - 0.05, 23):
        if kinks.size and np.min(np.abs(np.angle(np.exp(1j * (kinks - t))))) < 10 * step:
            continue
        fd = (f.half_mass(t + step) - f.half_mass(t - step)) / (2 * step)
        assert fd == pytest.approx(f(t + math.pi) - f(t), abs=1e-5)


def test_wedge_mass_matches_sampling(registered, rng):
    _, region, anchor, _ = registered
    f = rg.angular_density(region, anchor)
    n = 40_000
    pts = _uniform(region, n, rng)
    ang = np.mod(np.arctan2(pts[:, 1] - anchor[1], pts[:, 0] - anchor[0]), TWO_PI)
    for a, b in [(0.0, 1.0), (1.0, 2.5), (2.5, 4.0), (4.0, TWO_PI)]:
        p = float(f.cumulative(b) - f.cumulative(a))
        frac = np.mean((ang >= a) & (ang < b))
        sigma = math.sqrt(max(p * (1 - p), 1e-6) / n)
        assert abs(frac - p) < 5 * sigma


# -- specific regions --------------------------------------------------------

@pytest.mark.parametrize("a", [1.0, 1.5, 2.0, 5.0])
def test_polar_density_at_pole(a):
    reg = rg.limacon(a)
    f = rg.angular_density(reg)
    t = np.linspace(0, TWO_PI, 50)
    assert reg.area() == pytest.approx(1.0, abs=1e-12)
    np.testing.assert_allclose(2 * reg.area() * f(t), reg.radius(t) ** 2, atol=1e-13)


def test_polygon_density_equals_slice_sum():
    cee = rg.Polygon([(0, 0), (3, 0), (3, 1), (1, 1), (1, 2), (3, 2), (3, 3), (0, 3)])
    o = np.array([0.5, 1.5])
    f = rg.angular_density(cee, o)
    for t in np.linspace(0.01, TWO_PI - 0.01, 41):
        sl = rg.radial_slices_at(cee, o, t)
        total = sum(b * b - a * a for a, b in sl)
        assert 2 * cee.area() * f(t) == pytest.approx(total, rel=1e-12, abs=1e-12)
    assert len(rg.radial_slices_at(cee, o, 0.0)) == 1
    # a ray toward the upper arm crosses the notch and enters a second slice
    assert len(rg.radial_slices_at(cee, o, math.atan2(1.0, 2.0))) == 2


def test_crescent_geometry():
    c = rg.crescent()
    assert c.area() == pytest.approx(3 * math.pi / 4, rel=1e-12)
    assert rg.radial_slices_at(c, (0, 0), 0.0) == []  # zero-width slice dropped
    assert rg.radial_slices_at(c, (0, 0), math.pi) == [(0.0, 1.0)]
    assert rg.radial_slices_at(c, (0, 0), math.pi / 3)[0][0] == pytest.approx(0.5)


def test_unit_area_families():
    assert rg.OffsetDisk(r=0.3).area() == pytest.approx(1.0)
    assert rg.DiskSlice(0.4).area() == pytest.approx(1.0)
    assert rg.regular_polygon(7).area() == pytest.approx(1.0)
    assert rg.equilateral_triangle().area() == pytest.approx(1.0)
    np.testing.assert_allclose(rg.OffsetDisk(r=0.5).default_anchor, [0.5 / math.sqrt(math.pi), 0])


def test_disk_offset_density_exact():
    # chord length of a unit disk from (d, 0) along theta
    d = 0.4
    f = rg.angular_density(rg.Disk(), (d, 0.0))
    t = np.linspace(0, TWO_PI, 17)
    rho = -d * np.cos(t) + np.sqrt(1 - (d * np.sin(t)) ** 2)
    np.testing.assert_allclose(f(t), rho ** 2 / (2 * math.pi), rtol=1e-13)


def test_annulus_density_constant():
    f = rg.angular_density(rg.annulus(0.5, 1.0))
    np.testing.assert_allclose(f(np.linspace(0, 6, 7)), 1 / TWO_PI, rtol=1e-12)


# -- invariances ---------------------------------------------------------------

@settings(max_examples=25, deadline=None)
@given(dx=st.floats(-50, 50), dy=st.floats(-50, 50))
def test_translation_invariance(dx, dy):
    v = np.array([(0, 0), (3, 0), (2, 1), (3, 3), (0, 2)], dtype=float)
    o = np.array([1.0, 1.0])
    f0 = rg.angular_density(rg.Polygon(v), o)
    f1 = rg.angular_density(rg.Polygon(v + (dx, dy)), o + (dx, dy))
    t = np.linspace(0, TWO_PI, 29)
    np.testing.assert_allclose(f1(t), f0(t), rtol=1e-9, atol=1e-12)


@settings(max_examples=25, deadline=None)
@given(phi=st.floats(0.0, TWO_PI))
def test_rotation_shifts_density(phi):
    v = np.array([(0, 0), (3, 0), (2, 1), (3, 3), (0, 2)], dtype=float)
    o = np.array([1.0, 1.0])
    rot = np.array([[math.cos(phi), -math.sin(phi)], [math.sin(phi), math.cos(phi)]])
    f0 = rg.angular_density(rg.Polygon(v), o)
    f1 = rg.angular_density(rg.Polygon(v @ rot.T), rot @ o)
    # theta = 0 runs through the reflex vertex (2, 1), where the density jumps
    t = np.linspace(0.013, TWO_PI - 0.013, 29)
    np.testing.assert_allclose(f1(t + phi), f0(t), rtol=1e-8, atol=1e-10)


def test_orientation_normalised():
    cw = rg.Polygon([(0, 0), (0, 1), (1, 1), (1, 0)])
    assert cw.area() == pytest.approx(1.0)
    f = rg.angular_density(cw, (0.3, 0.6))
    g = rg.angular_density(rg.unit_square(), (0.3, 0.6))
    t = np.linspace(0, 6, 13)
    np.testing.assert_allclose(f(t), g(t), rtol=1e-14)


def test_rotated_view():
    f = rg.angular_density(rg.limacon(2.0))
    g = f.rotated(0.7)
    t = np.linspace(0, 6, 11)
    np.testing.assert_allclose(g(t), f(t + 0.7), rtol=1e-13)
    np.testing.assert_allclose(g.half_mass(t), f.half_mass(t + 0.7), atol=1e-13)


# -- errors ---------------------------------------------------------------------

def test_degenerate_polygon():
    with pytest.raises(DegenerateRegion):
        rg.Polygon([(0, 0), (1, 1), (2, 2)])
    with pytest.raises(DegenerateRegion):
        rg.Polygon([(0, 0), (1, 1)])


def test_self_intersecting_polygon():
    with pytest.raises(DomainError):
        rg.Polygon([(0, 0), (1, 1), (1, 0), (0, 1)])


@pytest.mark.parametrize("region, anchor", [
    (rg.unit_square(), (1.5, 0.5)),
    (rg.Disk(), (1.1, 0.0)),
    (rg.DiskSlice(0.25), (0.1, 0.0)),
    (rg.crescent(), (0.5, 0.0)),
])
def test_bad_anchor(region, anchor):
    with pytest.raises(DomainError):
        rg.angular_density(region, anchor)


def test_bad_parameters():
    with pytest.raises(DomainError):
        rg.limacon(0.5)
    with pytest.raises(DomainError):
        rg.DiskSlice(0.6)
    with pytest.raises(DomainError):
        rg.OffsetDisk(r=1.0)
    with pytest.raises(DomainError):
        rg.annulus(1.0, 0.5)


def test_boundary_anchor_accepted():
    # anchor on an edge of the square
    f = rg.angular_density(rg.unit_square(), (0.5, 0.0))
    assert f.cumulative(math.pi) - f.cumulative(0.0) == pytest.approx(1.0, abs=1e-12)


def test_barycentric_round_trip():
    tri = [(0.0, 0.0), (3.0, 0.0), (0.5, 2.0)]
    c = (1 / 6, 1 / 3, 1 / 2)
    p = rg.point_from_barycentric(tri, c)
    np.testing.assert_allclose(rg.barycentric_coordinates(tri, p), c, atol=1e-15)
