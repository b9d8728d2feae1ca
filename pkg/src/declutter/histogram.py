"""Polar obstacle histogram around an acting target, thresholds removed.

The histogram covers a symmetric angular window about the direction from the
acting target to the robot base (0 deg). Each inflated obstacle marks the
sectors inside its subtended angle with a magnitude that grows as the
obstacle gets closer; a sector stays at zero exactly when no obstacle disk
lies on rays through it. Magnitude constants are derived from the map size
so that an obstacle at the edge of the considered region scores exactly 1,
which keeps occupied sectors strictly positive with nothing to tune."""

from __future__ import annotations

import math
from dataclasses import dataclass, replace
from typing import Iterable, Sequence

import numpy as np

from . import kernel
from .cspace import InflatedObstacle

DEFAULT_ALPHA = 1.0     # degrees per sector
DEFAULT_WINDOW = 45.0   # half-angle of the reachable approach cone, degrees
DEFAULT_CELL = 0.005    # map cell edge, m
DEFAULT_B = 1.0         # magnitude falloff constant (map-cell units)


@dataclass(frozen=True)
class HistogramConfig:
    alpha: float = DEFAULT_ALPHA
    window: float = DEFAULT_WINDOW
    cell: float = DEFAULT_CELL
    b: float = DEFAULT_B
    w_s: int | None = None  # map width in cells; set via sized() before use

    def __post_init__(self):
        if self.alpha <= 0:
            raise ValueError("alpha must be > 0")
        if not (0 < self.window <= 180):
            raise ValueError("window must be in (0, 180] degrees")
        if self.cell <= 0:
            raise ValueError("cell must be > 0")
        if self.b <= 0:
            raise ValueError("b must be > 0")
        if self.w_s is not None and (self.w_s < 1 or self.w_s % 2 == 0):
            raise ValueError("w_s must be a positive odd cell count")

    def sized(self, d_max: float) -> "HistogramConfig":
        """Config with the map sized to cover radius d_max (w_s cells wide)."""
        if d_max < 0:
            raise ValueError("d_max must be >= 0")
        return replace(self, w_s=2 * math.ceil(d_max / self.cell) + 1)

    @property
    def half_cells(self) -> int:
        if self.w_s is None:
            raise ValueError("histogram config has no map size; call sized()")
        return (self.w_s - 1) // 2

    @property
    def a(self) -> float:
        """Magnitude offset chosen so a - b*half_cells^2 == 1."""
        return 1.0 + self.b * float(self.half_cells) ** 2

    @property
    def n_sectors(self) -> int:
        return int(math.floor(2 * self.window / self.alpha)) + 1

    def sector_angle(self, k: int) -> float:
        return -self.window + k * self.alpha

    def sector_angles(self) -> np.ndarray:
        return -self.window + np.arange(self.n_sectors) * self.alpha


@dataclass(frozen=True)
class PolarHistogram:
    config: HistogramConfig
    magnitudes: np.ndarray

    def sector_angle(self, k: int) -> float:
        return self.config.sector_angle(k)

    def min_magnitude(self) -> float:
        return float(self.magnitudes.min())

    def argmin_sector(self) -> int:
        """Sector index of the minimum magnitude. Ties go to the sector
        closest to the straight 0 deg approach, negative side first."""
        mags = self.magnitudes
        ties = np.flatnonzero(mags == mags.min())
        angles = self.config.sector_angles()[ties]
        order = np.lexsort((angles, np.abs(angles)))
        return int(ties[order[0]])

    def to_csv(self) -> str:
        lines = ["sector_angle_deg,magnitude"]
        angles = self.config.sector_angles()
        for ang, mag in zip(angles, self.magnitudes):
            lines.append(f"{ang:.6g},{mag:.10g}")
        return "\n".join(lines) + "\n"


def enlargement_angle(r_total: float, d_i: float, alpha: float = DEFAULT_ALPHA) -> float:
    """Half-extent of an inflated obstacle in the histogram, in sectors of
    alpha degrees: asin(r_total/d_i)/alpha, saturating at 90/alpha once the
    target center falls inside the inflated disk (the obstacle then blocks
    the whole half-plane toward it)."""
    if d_i <= 0:
        raise ValueError("obstacle distance must be > 0")
    if r_total >= d_i:
        return 90.0 / alpha
    return math.degrees(math.asin(r_total / d_i)) / alpha


def _as_arrays(obstacles: Sequence[InflatedObstacle]):
    xs = np.fromiter((o.x for o in obstacles), dtype=np.float64, count=len(obstacles))
    ys = np.fromiter((o.y for o in obstacles), dtype=np.float64, count=len(obstacles))
    rs = np.fromiter((o.r_total for o in obstacles), dtype=np.float64, count=len(obstacles))
    return xs, ys, rs


def histogram_from_arrays(obs_x: np.ndarray, obs_y: np.ndarray, r_tot: np.ndarray,
                          target_center: tuple[float, float],
                          base_dir: tuple[float, float],
                          cfg: HistogramConfig) -> PolarHistogram:
    """Array-level entry point used by the planner's hot loop."""
    if base_dir[0] == 0.0 and base_dir[1] == 0.0:
        raise ValueError("base direction vector must be nonzero")
    out = np.zeros(cfg.n_sectors, dtype=np.float64)
    kernel.histogram_fill(out, obs_x, obs_y, r_tot,
                          target_center[0], target_center[1],
                          base_dir[0], base_dir[1],
                          cfg.window, cfg.alpha, cfg.cell,
                          cfg.a, cfg.b, float(cfg.half_cells))
    return PolarHistogram(config=cfg, magnitudes=out)


def obstacle_histogram(obs: InflatedObstacle, target_center: tuple[float, float],
                       base_dir: tuple[float, float],
                       cfg: HistogramConfig) -> PolarHistogram:
    """Single-obstacle histogram in the frame where 0 deg points from the
    target center along base_dir."""
    xs, ys, rs = _as_arrays([obs])
    return histogram_from_arrays(xs, ys, rs, target_center, base_dir, cfg)


def total_histogram(obstacles: Iterable[InflatedObstacle],
                    target_center: tuple[float, float],
                    base: tuple[float, float],
                    cfg: HistogramConfig) -> PolarHistogram:
    """Sector-wise sum of all per-obstacle histograms; an empty obstacle set
    yields the all-zero histogram. `base` is the robot base point."""
    obstacles = list(obstacles)
    bdx = base[0] - target_center[0]
    bdy = base[1] - target_center[1]
    if bdx == 0.0 and bdy == 0.0:
        raise ValueError("base point coincides with the target center")
    if not obstacles:
        return PolarHistogram(config=cfg,
                              magnitudes=np.zeros(cfg.n_sectors, dtype=np.float64))
    xs, ys, rs = _as_arrays(obstacles)
    return histogram_from_arrays(xs, ys, rs, target_center, (bdx, bdy), cfg)
