"""Direct simulation of the containment and four-point events.

Samples are drawn in fixed-size blocks.  Block ``b`` of a run with seed ``s``
uses a Philox generator keyed by ``SeedSequence(s, spawn_key=(b,))``, so an
estimate depends only on ``(seed, n)`` and never on the number of workers.
"""

from __future__ import annotations

import math
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from .errors import DomainError, RejectionBudgetExceeded
from .region import Region, as_point

BLOCK_SIZE = 1 << 16
MIN_ACCEPTANCE = 1e-4


@dataclass(frozen=True)
class McEstimate:
    p_hat: float
    std_err: float
    n: int
    seed: int

    @classmethod
    def from_count(cls, hits: int, n: int, seed: int) -> "McEstimate":
        p = hits / n
        return cls(p, math.sqrt(p * (1.0 - p) / n), n, seed)


def block_rng(seed: int, block: int) -> np.random.Generator:
    return np.random.Generator(np.random.Philox(np.random.SeedSequence(seed, spawn_key=(block,))))


def sample_points(region: Region, n: int, rng: np.random.Generator) -> np.ndarray:
    """``n`` uniform points of ``region`` by rejection from its bounding box."""
    x0, y0, x1, y1 = region.bounding_box()
    lo = np.array([x0, y0])
    size = np.array([x1 - x0, y1 - y0])
    out = np.empty((n, 2))
    filled = drawn = 0
    rate = min(1.0, region.area() / float(size[0] * size[1]))
    while filled < n:
        batch = int(min(max(1024, (n - filled) / max(rate, MIN_ACCEPTANCE) * 1.1), 1 << 22))
        cand = lo + size * rng.random((batch, 2))
        keep = cand[region.contains(cand)]
        drawn += batch
        take = min(keep.shape[0], n - filled)
        out[filled:filled + take] = keep[:take]
        filled += take
        rate = max(filled, 1) / drawn
        if drawn >= 100_000 and filled / drawn < MIN_ACCEPTANCE:
            raise RejectionBudgetExceeded(
                f"acceptance rate {filled / drawn:.2e} below {MIN_ACCEPTANCE:g}")
    return out


def sample_point(region: Region, rng: np.random.Generator) -> tuple[float, float]:
    x, y = sample_points(region, 1, rng)[0]
    return float(x), float(y)


def _orient(a, b, c):
    return ((b[..., 0] - a[..., 0]) * (c[..., 1] - a[..., 1])
            - (b[..., 1] - a[..., 1]) * (c[..., 0] - a[..., 0]))


def triangle_contains(a, b, c, o) -> np.ndarray:
    """Whether ``o`` lies in the closed triangle ``abc`` (vectorised over leading axes)."""
    a, b, c, o = (np.asarray(p, dtype=float) for p in (a, b, c, o))
    d1, d2, d3 = _orient(a, b, o), _orient(b, c, o), _orient(c, a, o)
    neg = (d1 < 0) | (d2 < 0) | (d3 < 0)
    pos = (d1 > 0) | (d2 > 0) | (d3 > 0)
    inside = ~(neg & pos)
    # o collinear with a degenerate triangle: require it within the segment span
    flat = (d1 == 0) & (d2 == 0) & (d3 == 0)
    if np.any(flat):
        pts = np.stack(np.broadcast_arrays(a, b, c), axis=0)
        within = np.all((o >= pts.min(axis=0)) & (o <= pts.max(axis=0)), axis=-1)
        inside = np.where(flat, within, inside)
    return inside


def _block_sizes(n: int, block_size: int) -> list[int]:
    full, rest = divmod(n, block_size)
    return [block_size] * full + ([rest] if rest else [])


def _run_blocks(work, n: int, seed: int, workers, block_size: int) -> int:
    sizes = _block_sizes(n, block_size)
    jobs = [(seed, b, m) for b, m in enumerate(sizes)]
    workers = workers or min(8, os.cpu_count() or 1)
    if workers == 1 or len(jobs) == 1:
        counts = [work(*job) for job in jobs]
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            counts = list(pool.map(lambda job: work(*job), jobs))
    return int(sum(counts))


def _check_n(n: int):
    if n < 1000:
        raise DomainError("at least 1000 samples are required")


def estimate_probability(region: Region, anchor=None, n: int = 1_000_000, seed: int = 0,
                         workers=None, block_size: int = BLOCK_SIZE) -> McEstimate:
    """Fraction of ``n`` random triangles from ``region`` that contain ``anchor``."""
    _check_n(n)
    o = as_point(region.default_anchor if anchor is None else anchor)

    def work(seed, block, m):
        rng = block_rng(seed, block)
        p = sample_points(region, 3 * m, rng).reshape(m, 3, 2)
        return int(np.count_nonzero(triangle_contains(p[:, 0], p[:, 1], p[:, 2], o)))

    hits = _run_blocks(work, n, seed, workers, block_size)
    return McEstimate.from_count(hits, n, seed)


def sylvester_nonconvex(region: Region, n: int = 1_000_000, seed: int = 0,
                        workers=None, block_size: int = BLOCK_SIZE) -> McEstimate:
    """Probability that the first of four uniform points lies in the triangle of the other three.

    Four times this is the probability that the four points are not in convex position.
    """
    _check_n(n)

    def work(seed, block, m):
        rng = block_rng(seed, block)
        p = sample_points(region, 4 * m, rng).reshape(m, 4, 2)
        return int(np.count_nonzero(triangle_contains(p[:, 1], p[:, 2], p[:, 3], p[:, 0])))

    hits = _run_blocks(work, n, seed, workers, block_size)
    return McEstimate.from_count(hits, n, seed)
