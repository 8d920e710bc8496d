"""Table computation driver: parallel F evaluation, then interpolation."""
from __future__ import annotations

import logging
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import List, Optional, Tuple

from hypermaps.fseries import FGrid, f_series
from hypermaps.henum import HGrid, h_r_point
from hypermaps.interpolate import CoeffTable, SymmetricEvaluator, interpolate_table, sorted_points

__all__ = ["RunStats", "compute_table", "fill_grid"]

log = logging.getLogger(__name__)

Point = Tuple[int, int, int]


@dataclass
class RunStats:
    darts: int
    points: int = 0
    computed: int = 0
    cached: int = 0
    evaluations: int = 0
    seconds: float = 0.0

    def summary(self) -> str:
        return (
            f"r={self.darts}: {self.evaluations} point evaluations "
            f"({self.computed} computed, {self.cached} from cache) in {self.seconds:.2f}s"
        )


def _series_job(job):
    kmax, m, n, lam = job
    return (m, n, lam), f_series(kmax, m, n, lam)


def fill_grid(r: int, points: List[Point], grid: FGrid, threads: int = 1) -> Tuple[int, int]:
    """Make sure ``F_1..F_r`` is stored for every point; returns (computed, cached)."""
    missing = [p for p in points if grid.series(r, *p) is None]
    cached = len(points) - len(missing)
    # expensive points (many composition parts) first for better load balance
    jobs = sorted(((r,) + p for p in missing), key=lambda j: (-min(j[1:3]), j))
    if threads > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(_series_job, jobs, chunksize=1))
    else:
        results = [_series_job(job) for job in jobs]
    # join barrier: insert on one thread, in a fixed order
    for (m, n, lam), series in sorted(results):
        grid.store_series(m, n, lam, series)
    return len(missing), cached


def compute_table(r: int, threads: int = 1, grid: Optional[FGrid] = None) -> Tuple[CoeffTable, RunStats]:
    """Coefficient table of ``H_r`` and run statistics."""
    if r < 1:
        raise ValueError(f"darts must be >= 1, got {r}")
    start = time.perf_counter()
    grid = FGrid() if grid is None else grid
    points = sorted_points(r)
    computed, cached = fill_grid(r, points, grid, threads)
    hgrid = HGrid()
    evaluator = SymmetricEvaluator(lambda m, n, lam: h_r_point(r, m, n, lam, grid, hgrid))
    table = interpolate_table(r, evaluator)
    stats = RunStats(
        darts=r,
        points=len(points),
        computed=computed,
        cached=cached,
        evaluations=evaluator.evaluations,
        seconds=time.perf_counter() - start,
    )
    log.info(stats.summary())
    return table, stats
