"""Pure-Python histogram kernel, the fallback when the compiled extension is
unavailable. Mirrors _histcore.pyx operation for operation so both backends
produce bit-identical magnitudes."""

from __future__ import annotations

import math

import numpy as np

RAD2DEG = 180.0 / math.pi

BACKEND = "python"


def histogram_fill(out, obs_x, obs_y, r_tot, tx, ty, bdx, bdy,
                   window, alpha, cell, a, b, half_cells):
    """Accumulate every obstacle's sector magnitudes into `out`.

    Angles live in the frame where 0 deg points from the acting target at
    (tx, ty) along (bdx, bdy) toward the robot base; positive angles are on
    the right of that gaze. Sector k spans [angle_k - alpha/2,
    angle_k + alpha/2) around angle_k = -window + k*alpha. An obstacle whose
    subtended interval touches a sector marks it with magnitude
    a - b*(d/cell)^2; obstacles beyond half_cells map cells contribute
    nothing. Raises ValueError if an obstacle center coincides with the
    target center.
    """
    n = out.shape[0]
    for i in range(obs_x.shape[0]):
        dx = obs_x[i] - tx
        dy = obs_y[i] - ty
        d = math.sqrt(dx * dx + dy * dy)
        if d == 0.0:
            raise ValueError(
                "obstacle center coincides with the acting target center")
        d_cells = d / cell
        if d_cells > half_cells:
            continue
        ratio = r_tot[i] / d
        if ratio >= 1.0:
            gamma = 90.0
        else:
            gamma = RAD2DEG * math.asin(ratio)
        beta = RAD2DEG * math.atan2(bdy * dx - bdx * dy, bdx * dx + bdy * dy)
        lo = beta - gamma
        hi = beta + gamma
        k_lo = int(math.floor((lo + window) / alpha - 0.5)) + 1
        k_hi = int(math.floor((hi + window) / alpha + 0.5))
        if k_lo < 0:
            k_lo = 0
        if k_hi > n - 1:
            k_hi = n - 1
        if k_lo > k_hi:
            continue
        mag = a - b * (d_cells * d_cells)
        out[k_lo:k_hi + 1] += mag


def bearings_and_distances(obs_x, obs_y, tx, ty, bdx, bdy):
    """Per-obstacle (beta_deg, distance_m) in the same frame as
    histogram_fill. Distance 0 raises ValueError."""
    m = obs_x.shape[0]
    beta = np.empty(m, dtype=np.float64)
    dist = np.empty(m, dtype=np.float64)
    for i in range(m):
        dx = obs_x[i] - tx
        dy = obs_y[i] - ty
        d = math.sqrt(dx * dx + dy * dy)
        if d == 0.0:
            raise ValueError(
                "obstacle center coincides with the acting target center")
        beta[i] = RAD2DEG * math.atan2(bdy * dx - bdx * dy, bdx * dx + bdy * dy)
        dist[i] = d
    return beta, dist
