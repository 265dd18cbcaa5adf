"""Acceptance criteria, one test per criterion.

Each criterion is checked at its stated tolerance by closed form, by the
angular quadrature and by Monte Carlo (10**6 samples, 4 standard errors).
A PASS/FAIL line per criterion is printed; under pytest the lines are also
collected into the terminal summary.  Run directly with
``python tests/test_acceptance.py`` to get only the lines.
"""

from __future__ import annotations

import math
import sys
import time
import zlib
from dataclasses import dataclass
from pathlib import Path

import numpy as np
import pytest

sys.path.insert(0, str(Path(__file__).resolve().parent))

from regions import REGISTRY  # noqa: E402

from randtri import analysis, kernel, montecarlo  # noqa: E402
from randtri import closed_forms as cf  # noqa: E402
from randtri import region as rg  # noqa: E402

PI2 = math.pi ** 2
LN2, LN3, LN5 = math.log(2), math.log(3), math.log(5)
E = math.e
MC_N = 1_000_000
MC_SIGMAS = 4.0
SCALENE = [(0.0, 0.0), (3.0, 0.0), (0.5, 2.0)]
BOUNDARY_ANCHORS = {"cardioid-pole", "crescent-origin"}


@dataclass
class Check:
    label: str
    ok: bool
    detail: str


def close(label, got, want, tol):
    err = abs(got - want)
    return Check(label, err <= tol, f"got {got:.12g}, want {want:.12g}, |diff|={err:.2e} (tol {tol:g})")


def quad(region, anchor=None):
    return kernel.containment_probability(region, anchor).value


def mc(label, region, anchor, target, seed):
    t0 = time.perf_counter()
    est = montecarlo.estimate_probability(region, anchor, n=MC_N, seed=seed)
    dt = time.perf_counter() - t0
    z = (est.p_hat - target) / est.std_err if est.std_err > 0 else (0.0 if est.p_hat == target else math.inf)
    return Check(label, abs(z) <= MC_SIGMAS,
                 f"p_hat {est.p_hat:.6f} +- {est.std_err:.6f}, z={z:+.2f}, {dt:.1f}s")


# -- criteria -----------------------------------------------------------------------

def criterion_1():
    exact = 2 / 27 + 20 * LN2 / 81
    tri = rg.equilateral_triangle()
    return [
        close("stated decimal", exact, 0.2452215261, 1e-10),
        close("closed form (barycentric)", cf.triangle_probability((1 / 3, 1 / 3, 1 / 3)), exact, 1e-7),
        close("quadrature", quad(tri), exact, 1e-7),
        mc("monte carlo", tri, None, exact, seed=101),
    ]


def criterion_2():
    a2 = 0.25 - 272 / (243 * PI2)
    a1 = 0.25 - 20 / (9 * PI2)
    return [
        close("a=2 closed form", cf.limacon_probability(2.0), a2, 1e-8),
        close("a=2 quadrature", quad(rg.limacon(2.0)), a2, 1e-8),
        close("a=1 stated decimal", a1, 0.0248418142, 1e-10),
        close("a=1 closed form", cf.limacon_probability(1.0), a1, 1e-8),
        close("a=1 quadrature", quad(rg.limacon(1.0)), a1, 1e-8),
        mc("a=2 monte carlo", rg.limacon(2.0), None, a2, seed=201),
        mc("a=1 monte carlo", rg.limacon(1.0), None, a1, seed=202),
    ]


def criterion_3():
    target = 0.24982224
    pent = rg.regular_polygon(5)
    return [
        close("m=2 closed form", cf.regular_polygon_probability(2), target, 1e-6),
        close("m=2 quadrature", quad(pent), target, 1e-6),
        close("m=1 closed form vs triangle", cf.regular_polygon_probability(1),
              2 / 27 + 20 * LN2 / 81, 1e-10),
        mc("m=2 monte carlo", pent, None, cf.regular_polygon_probability(2), seed=301),
    ]


def criterion_4():
    exact = 1 / 27 + 41 * LN5 / 972 + 17 * LN2 / 243
    coords = (1 / 6, 1 / 3, 1 / 2)
    tri = rg.Polygon(SCALENE)
    anchor = rg.point_from_barycentric(SCALENE, coords)
    return [
        close("approx 0.1534", exact, 0.1534, 5e-5),
        close("barycentric formula", cf.triangle_probability(coords), exact, 1e-7),
        close("quadrature on a concrete triangle", quad(tri, anchor), exact, 1e-7),
        mc("monte carlo", tri, anchor, exact, seed=401),
    ]


def criterion_5():
    sq = rg.unit_square()
    half_quarter = 5 / 48 + 9 * LN3 / 256
    thirds = 23 / 162 + 7 * LN2 / 243
    u = 1 / (1 + E)
    stated = (5 * E ** 5 + 6 * E ** 4 + 13 * E ** 3 + 7 * E ** 2 - 6 * E + 1) / (E * (E + 1) ** 6)
    return [
        close("(1/2,1/4) closed form", cf.square_probability(0.5, 0.25), half_quarter, 1e-7),
        close("(1/2,1/4) quadrature", quad(sq, (0.5, 0.25)), half_quarter, 1e-7),
        close("(1/3,1/3) closed form", cf.square_probability(1 / 3, 1 / 3), thirds, 1e-7),
        close("(1/3,1/3) quadrature", quad(sq, (1 / 3, 1 / 3)), thirds, 1e-7),
        close("(u,u) diagonal formula vs stated expression", cf.square_diagonal_probability(u), stated, 1e-7),
        close("(u,u) quadrature vs stated expression", quad(sq, (u, u)), stated, 1e-7),
        mc("(1/2,1/4) monte carlo", sq, (0.5, 0.25), half_quarter, seed=501),
        mc("(1/3,1/3) monte carlo", sq, (1 / 3, 1 / 3), thirds, seed=502),
        mc("(u,u) monte carlo vs stated expression", sq, (u, u), stated, seed=503),
    ]


def criterion_6():
    exact = (4 * PI2 - 5) / (18 * PI2)
    c = rg.crescent()
    return [
        close("stated decimal", exact, 0.1940774490, 1e-10),
        close("quadrature", quad(c, (0.0, 0.0)), exact, 1e-7),
        mc("monte carlo", c, (0.0, 0.0), exact, seed=601),
    ]


def criterion_7():
    checks = []
    for i, a in enumerate((0.0, 0.1, 0.25, 0.4, 0.5)):
        exact = (1 + a) * (1 - 2 * a) ** 2 / (4 * (1 - a) ** 3)
        region = rg.DiskSlice(a)
        checks.append(close(f"a={a} closed form", cf.slice_disk_probability(a), exact, 1e-7))
        checks.append(close(f"a={a} quadrature", quad(region), exact, 1e-7))
        checks.append(mc(f"a={a} monte carlo", region, None, exact, seed=701 + i))
    return checks


def criterion_8():
    ref = 35 / (48 * PI2)
    region = rg.OffsetDisk(r=0.5)
    avg = cf.offset_disk_average()
    t0 = time.perf_counter()
    syl = montecarlo.sylvester_nonconvex(rg.Disk(), n=10_000_000, seed=801)
    dt = time.perf_counter() - t0
    z = (syl.p_hat - ref) / syl.std_err
    return [
        close("P_1/2 closed form", cf.offset_disk_probability(0.5), 0.1250, 5e-4),
        close("P_1/2 quadrature", quad(region), 0.1250, 5e-4),
        mc("P_1/2 monte carlo", region, None, cf.offset_disk_probability(0.5), seed=802),
        close("disk average stated decimal", ref, 0.07388002974, 1e-11),
        close("disk average", avg.value, ref, 1e-6),
        Check("four-point monte carlo, n=1e7", abs(z) <= MC_SIGMAS,
              f"p_hat {syl.p_hat:.6f} +- {syl.std_err:.6f}, z={z:+.2f}, {dt:.1f}s"),
    ]


def criterion_9():
    spread_max, comp_max, n_cases = 0.0, 0.0, 0
    sym_ok, sandwich_ok, ceiling_ok = True, True, True
    notes = []
    for name, region, anchor, symmetric in REGISTRY:
        anchor = region.default_anchor if anchor is None else np.asarray(anchor, float)
        f = rg.angular_density(region, anchor)
        values = [kernel.probability(f).value, kernel.probability_median(f).value]
        rng = np.random.default_rng(zlib.crc32(name.encode()))
        values += [kernel.probability_via_u(f, u).value for u in rng.uniform(0, 2 * math.pi, 8)]
        if name not in BOUNDARY_ANCHORS:
            values.append(kernel.probability_double_integral(region, anchor).value)
        spread_max = max(spread_max, max(values) - min(values))
        t = np.linspace(0, 2 * math.pi, 257)
        comp_max = max(comp_max, float(np.max(np.abs(f.half_mass(t) + f.half_mass(t + math.pi) - 1))))
        p = values[0]
        if p > 0.25:
            ceiling_ok = False
            notes.append(f"{name}: P={p!r} > 1/4")
        at_quarter = abs(p - 0.25) <= 1e-8
        if at_quarter != symmetric:
            sym_ok = False
            notes.append(f"{name}: P={p:.12g} symmetric={symmetric}")
        rep = analysis.bounds(region, anchor)
        if not rep.lower - 1e-9 <= rep.p <= rep.upper + 1e-9:
            sandwich_ok = False
            notes.append(f"{name}: {rep}")
        n_cases += 1
    tri = analysis.bounds(rg.equilateral_triangle())
    return [
        Check("four formulas pairwise agree", spread_max <= 1e-5,
              f"max spread {spread_max:.2e} over {n_cases} regions x 8 directions (tol 1e-5)"),
        Check("H(t) + H(t+pi) = 1", comp_max <= 1e-10, f"max deviation {comp_max:.2e} (tol 1e-10)"),
        Check("P <= 1/4", ceiling_ok, "; ".join(notes) or "all regions"),
        Check("P = 1/4 exactly on symmetric regions", sym_ok, "; ".join(notes) or "tol 1e-8"),
        Check("sandwich bounds hold", sandwich_ok, "; ".join(notes) or f"{n_cases} regions"),
        Check("triangle centroid bracket", 176 / 729 < tri.p <= 182 / 729,
              f"176/729={176 / 729:.10f} < {tri.p:.10f} <= 182/729={182 / 729:.10f}"),
    ]


def criterion_10():
    tri = analysis.maximize(rg.Polygon(SCALENE))
    bary = rg.barycentric_coordinates(SCALENE, tri.argmax)
    dist = float(np.max(np.abs(bary - 1 / 3)))
    sq = analysis.maximize(rg.unit_square())
    disk = analysis.maximize(rg.Disk())
    return [
        Check("triangle argmax at centroid", dist <= 1e-3,
              f"barycentric {np.round(bary, 6).tolist()}, max deviation {dist:.1e} (tol 1e-3)"),
        close("triangle p_max", tri.p_max, 2 / 27 + 20 * LN2 / 81, 1e-6),
        Check("square argmax at center", max(abs(sq.argmax[0] - 0.5), abs(sq.argmax[1] - 0.5)) <= 1e-3,
              f"argmax {sq.argmax}"),
        close("square p_max", sq.p_max, 0.25, 1e-6),
        Check("disk argmax at center", math.hypot(*disk.argmax) <= 1e-3, f"argmax {disk.argmax}"),
        close("disk p_max", disk.p_max, 0.25, 1e-6),
    ]


CRITERIA = {
    1: ("equilateral triangle, centroid", criterion_1),
    2: ("limacon family", criterion_2),
    3: ("regular pentagon and triangle as m=1", criterion_3),
    4: ("triangle at barycentric (1/6,1/3,1/2)", criterion_4),
    5: ("square anchors", criterion_5),
    6: ("crescent at the origin", criterion_6),
    7: ("sliced disk", criterion_7),
    8: ("off-center disk and four-point problem", criterion_8),
    9: ("property suite", criterion_9),
    10: ("maximizer", criterion_10),
}


def evaluate(number: int) -> tuple[str, list[Check]]:
    title, func = CRITERIA[number]
    t0 = time.perf_counter()
    checks = func()
    ok = all(c.ok for c in checks)
    line = f"{'PASS' if ok else 'FAIL'}  criterion {number:2d}: {title} ({time.perf_counter() - t0:.1f}s)"
    failed = [f"      - {c.label}: {c.detail}" for c in checks if not c.ok]
    return "\n".join([line] + failed), checks


@pytest.mark.parametrize("number", sorted(CRITERIA))
def test_criterion(number, acceptance_log):
    line, checks = evaluate(number)
    print(line)
    for c in checks:
        print(f"    [{'ok' if c.ok else 'FAIL'}] {c.label}: {c.detail}")
    acceptance_log.append(line)
    bad = [f"{c.label}: {c.detail}" for c in checks if not c.ok]
    assert not bad, "; ".join(bad)


if __name__ == "__main__":
    status = 0
    for n in sorted(CRITERIA):
        line, _ = evaluate(n)
        print(line, flush=True)
        status |= not line.startswith("PASS")
    sys.exit(status)
