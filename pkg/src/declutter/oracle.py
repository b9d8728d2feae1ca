"""Independent ground-truth engines: exact angular-interval accessibility and
the brute-force minimum-relocation count.

This module deliberately reimplements its geometry from scratch (no shared
kernel, no histogram code) so it can serve as the cross-check for the
histogram-based planner."""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Optional, Sequence

from .cspace import CSpaceParams
from .scene import Scene

ENUMERATION_LIMIT = 15  # max scene size for subset enumeration


@dataclass(frozen=True)
class AccessReport:
    accessible: bool
    free_angles: tuple[tuple[float, float], ...]  # maximal free intervals, deg


def _blocked_interval(tx: float, ty: float, bx: float, by: float,
                      ox: float, oy: float, r_total: float) -> tuple[float, float]:
    """Angular interval (degrees, 0 deg = target-to-base, positive to the
    right of that gaze) subtended at the target by one inflated disk."""
    dx = ox - tx
    dy = oy - ty
    d = math.sqrt(dx * dx + dy * dy)
    if d == 0.0:
        raise ValueError("obstacle center coincides with the target center")
    bdx = bx - tx
    bdy = by - ty
    beta = math.degrees(math.atan2(bdy * dx - bdx * dy, bdx * dx + bdy * dy))
    if d <= r_total:
        half = 90.0  # target center inside the inflated disk: half-plane block
    else:
        half = math.degrees(math.asin(r_total / d))
    return (beta - half, beta + half)


def _clip_wrapped(interval: tuple[float, float], window: float) -> list[tuple[float, float]]:
    """Clip an interval (which may spill past +-180) to [-window, window],
    wrapping the spilled part around the circle."""
    lo, hi = interval
    pieces = [(lo, hi)]
    if hi > 180.0:
        pieces = [(lo, 180.0), (-180.0, hi - 360.0)]
    elif lo < -180.0:
        pieces = [(-180.0, hi), (lo + 360.0, 180.0)]
    out = []
    for plo, phi in pieces:
        clo = max(plo, -window)
        chi = min(phi, window)
        if clo <= chi:
            out.append((clo, chi))
    return out


def _free_intervals(blocked: Sequence[tuple[float, float]],
                    window: float) -> tuple[tuple[float, float], ...]:
    """Complement of the union of blocked intervals inside [-window, window];
    only intervals of positive length survive (a tangent ray counts as hit)."""
    merged: list[tuple[float, float]] = []
    for lo, hi in sorted(blocked):
        if merged and lo <= merged[-1][1]:
            if hi > merged[-1][1]:
                merged[-1] = (merged[-1][0], hi)
        else:
            merged.append((lo, hi))
    free = []
    cursor = -window
    for lo, hi in merged:
        if lo > cursor:
            free.append((cursor, lo))
        cursor = max(cursor, hi)
    if cursor < window:
        free.append((cursor, window))
    return tuple(free)


def _intervals_for(scene: Scene, acting_target_id: str, params: CSpaceParams,
                   window: float,
                   exclude: frozenset[str] = frozenset()) -> list[tuple[float, float]]:
    t = scene.by_id(acting_target_id)
    bx, by = scene.base
    blocked: list[tuple[float, float]] = []
    for o in scene.objects:
        if o.id == acting_target_id or o.id in exclude:
            continue
        r_total = t.radius + params.r_s + o.radius + params.r_g
        iv = _blocked_interval(t.x, t.y, bx, by, o.x, o.y, r_total)
        blocked.extend(_clip_wrapped(iv, window))
    return blocked


def ray_accessible(scene: Scene, acting_target_id: Optional[str] = None,
                   params: CSpaceParams = CSpaceParams(),
                   window: float = 45.0) -> AccessReport:
    """Exact test: does any straight ray from the acting target, within
    +-window degrees of the direction to the base, miss every inflated
    obstacle disk?"""
    tid = acting_target_id if acting_target_id is not None else scene.target_id
    blocked = _intervals_for(scene, tid, params, window)
    free = _free_intervals(blocked, window)
    return AccessReport(accessible=len(free) > 0, free_angles=free)


def min_relocation_set(scene: Scene, params: CSpaceParams = CSpaceParams(),
                       window: float = 45.0) -> tuple[int, frozenset[str]]:
    """Smallest set of obstacles whose removal opens a free approach ray to
    the target, by subset enumeration in increasing size (lexicographic
    within a size, first hit wins). Only for scenes of at most
    ENUMERATION_LIMIT objects."""
    if len(scene) > ENUMERATION_LIMIT:
        raise ValueError(
            f"scene has {len(scene)} objects; enumeration is limited to "
            f"{ENUMERATION_LIMIT}")
    obstacle_ids = sorted(o.id for o in scene.objects if o.id != scene.target_id)
    t = scene.by_id(scene.target_id)
    bx, by = scene.base

    per_obstacle: dict[str, list[tuple[float, float]]] = {}
    for oid in obstacle_ids:
        o = scene.by_id(oid)
        r_total = t.radius + params.r_s + o.radius + params.r_g
        iv = _blocked_interval(t.x, t.y, bx, by, o.x, o.y, r_total)
        per_obstacle[oid] = _clip_wrapped(iv, window)

    def accessible_without(removed: Iterable[str]) -> bool:
        gone = set(removed)
        blocked = [iv for oid, ivs in per_obstacle.items() if oid not in gone
                   for iv in ivs]
        return len(_free_intervals(blocked, window)) > 0

    if accessible_without(()):
        return (0, frozenset())
    for size in range(1, len(obstacle_ids) + 1):
        for combo in combinations(obstacle_ids, size):
            if accessible_without(combo):
                return (size, frozenset(combo))
    # removing every obstacle always frees the window, so we never get here
    raise AssertionError("unreachable: empty obstacle set must be accessible")
