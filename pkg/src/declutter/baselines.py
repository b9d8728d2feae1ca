"""Comparison planners: straight-line corridor clearing and a Gaussian
angular-density heuristic.

Both share the planner's frame (0 deg = acting-target-to-base direction,
positive angles to the right of that gaze) and its inflation model, but make
their decisions without the polar histogram.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from . import kernel
from .cspace import CSpaceParams
from .histogram import DEFAULT_ALPHA, DEFAULT_WINDOW, HistogramConfig
from .planner import Plan, PlanStep
from .scene import Scene

DEFAULT_TAU = 0.3


@dataclass(frozen=True)
class GaussianParams:
    threshold: float = DEFAULT_TAU
    sigma_scale: float = 1.0

    def __post_init__(self):
        if not (self.threshold > 0.0):
            raise ValueError("threshold must be positive")
        if not (self.sigma_scale > 0.0):
            raise ValueError("sigma_scale must be positive")


def _segment_hits(scene: Scene, params: CSpaceParams) -> list[tuple[float, str]]:
    """Obstacles whose inflated disk meets the closed base-to-target segment,
    as (distance from base, id) pairs."""
    target = scene.by_id(scene.target_id)
    ax, ay = scene.base
    bx, by = target.x, target.y
    ex = bx - ax
    ey = by - ay
    seg2 = ex * ex + ey * ey
    hits = []
    for o in scene.objects:
        if o.id == scene.target_id:
            continue
        r_total = target.radius + params.r_s + o.radius + params.r_g
        if seg2 == 0.0:
            t = 0.0
        else:
            t = ((o.x - ax) * ex + (o.y - ay) * ey) / seg2
            t = min(max(t, 0.0), 1.0)
        cx = ax + t * ex
        cy = ay + t * ey
        gap = math.sqrt((o.x - cx) ** 2 + (o.y - cy) ** 2)
        if gap <= r_total:
            d_base = math.sqrt((o.x - ax) ** 2 + (o.y - ay) ** 2)
            hits.append((d_base, o.id))
    return hits


def straight_line_plan(scene: Scene, params: CSpaceParams = CSpaceParams()) -> Plan:
    """Clear every obstacle overlapping the base-to-target segment, nearest
    to the base first, then grasp the target."""
    hits = sorted(_segment_hits(scene, params))
    steps = [PlanStep(object_id=oid) for _, oid in hits]
    steps.append(PlanStep(object_id=scene.target_id))
    return Plan(steps=tuple(steps))


def straight_line_step(scene: Scene, params: CSpaceParams = CSpaceParams()) -> str:
    """Next grasp under the straight-line policy."""
    hits = _segment_hits(scene, params)
    if hits:
        return min(hits)[1]
    return scene.target_id


def _density_decision(scene: Scene, gp: GaussianParams, params: CSpaceParams,
                      alpha: float, window: float) -> str:
    """One Gaussian-density decision: the target if the quietest direction is
    below threshold, else the obstacle nearest in bearing to that direction."""
    target = scene.by_id(scene.target_id)
    obstacles = [o for o in scene.objects if o.id != scene.target_id]
    if not obstacles:
        return scene.target_id
    tx, ty = target.x, target.y
    bx, by = scene.base
    bdx = bx - tx
    bdy = by - ty
    if bdx == 0.0 and bdy == 0.0:
        raise ValueError("target coincides with the base point")

    ox = np.array([o.x for o in obstacles])
    oy = np.array([o.y for o in obstacles])
    beta, dist = kernel.bearings_and_distances(ox, oy, tx, ty, bdx, bdy)
    if float(dist.min()) == 0.0:
        raise ValueError("two objects share a center")
    r_tot = np.array([target.radius + params.r_s + o.radius + params.r_g
                      for o in obstacles])
    ratio = np.minimum(r_tot / dist, 1.0)
    half_angle = np.degrees(np.arcsin(ratio))  # 90 deg once overlapped
    sigma = gp.sigma_scale * half_angle

    n = math.floor(2.0 * window / alpha) + 1
    theta = -window + alpha * np.arange(n)
    diff = np.abs(theta[:, None] - beta[None, :])
    diff = np.minimum(diff, 360.0 - diff)
    density = np.exp(-(diff * diff) / (2.0 * sigma * sigma)[None, :]).sum(axis=1)

    order = np.lexsort((theta, np.abs(theta), density))
    best = order[0]
    if density[best] < gp.threshold:
        return scene.target_id
    gap = np.abs(beta - theta[best])
    gap = np.minimum(gap, 360.0 - gap)
    pick = sorted(range(len(obstacles)),
                  key=lambda j: (gap[j], dist[j], obstacles[j].id))[0]
    return obstacles[pick].id


def gaussian_step(scene: Scene, gp: GaussianParams = GaussianParams(),
                  params: CSpaceParams = CSpaceParams(),
                  cfg: Optional[HistogramConfig] = None) -> str:
    """Next grasp under the Gaussian-density policy."""
    alpha = cfg.alpha if cfg is not None else DEFAULT_ALPHA
    window = cfg.window if cfg is not None else DEFAULT_WINDOW
    return _density_decision(scene, gp, params, alpha, window)


def gaussian_plan(scene: Scene, gp: GaussianParams = GaussianParams(),
                  params: CSpaceParams = CSpaceParams(),
                  cfg: Optional[HistogramConfig] = None) -> Plan:
    """Iterate the Gaussian-density decision on the shrinking scene until the
    target is chosen."""
    alpha = cfg.alpha if cfg is not None else DEFAULT_ALPHA
    window = cfg.window if cfg is not None else DEFAULT_WINDOW
    working = scene
    steps: list[PlanStep] = []
    while True:
        pick = _density_decision(working, gp, params, alpha, window)
        steps.append(PlanStep(object_id=pick))
        if pick == working.target_id:
            return Plan(steps=tuple(steps))
        working = working.without(pick)
