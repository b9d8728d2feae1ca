"""Histogram-guided rearrangement planning.

The planner walks a chain of "acting targets": starting from the real target,
it asks whether the acting target can be approached through a zero-magnitude
sector of its polar histogram; if not, the obstacle whose bearing sits closest
to the least-blocked direction becomes the next acting target. Each grasp is
decided by a fresh walk from the real target, so a single step of the planner
(`replan_step`) is stateless and a full plan is exactly the sequence of
single steps on the shrinking scene.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from . import kernel
from .cspace import CSpaceParams
from .histogram import HistogramConfig, PolarHistogram, histogram_from_arrays
from .scene import Scene

#: Histogram magnitudes at or below this count as an open (zero) sector.
ZERO_MAGNITUDE_TOL = 1e-9


@dataclass(frozen=True)
class DecisionRecord:
    """Diagnostics of the accessibility check that produced one grasp."""
    d_max: float
    argmin_sector: float  # degrees; direction of the least-blocked sector
    chosen_c: float       # degrees; bearing gap of the grasped object (0 if free)
    histogram_min_magnitude: float


@dataclass(frozen=True)
class PlanStep:
    object_id: str
    record: Optional[DecisionRecord] = None


@dataclass(frozen=True)
class Plan:
    steps: tuple[PlanStep, ...]

    @property
    def object_ids(self) -> tuple[str, ...]:
        return tuple(s.object_id for s in self.steps)

    @property
    def relocations(self) -> int:
        """Number of grasps before the final (target) grasp."""
        return max(len(self.steps) - 1, 0)

    def to_json_obj(self) -> dict:
        steps = []
        for s in self.steps:
            entry: dict = {"object_id": s.object_id}
            if s.record is not None:
                entry["record"] = {
                    "d_max": s.record.d_max,
                    "argmin_sector": s.record.argmin_sector,
                    "chosen_c": s.record.chosen_c,
                    "histogram_min_magnitude": s.record.histogram_min_magnitude,
                }
            steps.append(entry)
        return {"steps": steps, "relocations": self.relocations}


@dataclass(frozen=True)
class CheckReport:
    """Everything one accessibility check saw, for auditing and tests."""
    acting_target_id: str
    object_id: str            # acting target if free, else the chosen blocker
    free: bool
    d_max: float
    min_magnitude: float
    argmin_sector_deg: float
    ranking: tuple[str, ...]  # candidate blockers, best first (empty if free)
    histogram: PolarHistogram


class _State:
    """Mutable array mirror of a scene, shared by one planning run."""

    def __init__(self, scene: Scene, params: CSpaceParams, cfg: HistogramConfig):
        self.ids = [o.id for o in scene.objects]
        self.index = {oid: i for i, oid in enumerate(self.ids)}
        self.xs = np.array([o.x for o in scene.objects], dtype=np.float64)
        self.ys = np.array([o.y for o in scene.objects], dtype=np.float64)
        self.radii = np.array([o.radius for o in scene.objects], dtype=np.float64)
        self.alive = np.ones(len(self.ids), dtype=bool)
        self.base = scene.base
        self.target_idx = self.index[scene.target_id]
        self.params = params
        self.cfg = cfg

    def check(self, acting_idx: int, d_max_cap: Optional[float] = None) -> CheckReport:
        """One accessibility check of the acting target against every other
        live object within d_max (d_max defaults to the farthest of them)."""
        tx = float(self.xs[acting_idx])
        ty = float(self.ys[acting_idx])
        bx, by = self.base
        bdx = bx - tx
        bdy = by - ty
        if bdx == 0.0 and bdy == 0.0:
            raise ValueError("acting target coincides with the base point")

        others = self.alive.copy()
        others[acting_idx] = False
        ox = self.xs[others]
        oy = self.ys[others]
        orad = self.radii[others]
        oids = [oid for oid, keep in zip(self.ids, others) if keep]

        dx = ox - tx
        dy = oy - ty
        dist = np.sqrt(dx * dx + dy * dy)
        if dist.size and float(dist.min()) == 0.0:
            raise ValueError("two objects share a center")
        d_max = float(dist.max()) if dist.size else 0.0
        if d_max_cap is not None:
            d_max = d_max_cap
            near = dist <= d_max
            ox, oy, orad, dist = ox[near], oy[near], orad[near], dist[near]
            oids = [oid for oid, keep in zip(oids, near) if keep]

        acting_id = self.ids[acting_idx]
        cfg = self.cfg.sized(max(d_max, self.cfg.cell))
        r_tot = float(self.radii[acting_idx]) + self.params.r_s + orad + self.params.r_g
        hist = histogram_from_arrays(ox, oy, r_tot, (tx, ty), (bdx, bdy), cfg)
        min_mag = hist.min_magnitude()
        argmin_deg = cfg.sector_angle(hist.argmin_sector())

        if min_mag <= ZERO_MAGNITUDE_TOL or not oids:
            return CheckReport(acting_id, acting_id, True, d_max, min_mag,
                               argmin_deg, (), hist)

        beta, _ = kernel.bearings_and_distances(ox, oy, tx, ty, bdx, bdy)
        gap = np.abs(beta - argmin_deg)
        gap = np.minimum(gap, 360.0 - gap)
        order = sorted(range(len(oids)),
                       key=lambda j: (gap[j], dist[j], oids[j]))
        ranking = tuple(oids[j] for j in order)
        return CheckReport(acting_id, ranking[0], False, d_max, min_mag,
                           argmin_deg, ranking, hist)

    def descend(self) -> tuple[int, CheckReport, float]:
        """Walk blocker-of-blocker from the real target until some acting
        target is free (or every way forward is already on the chain), and
        return it as the next grasp.

        Returns (index, report, chosen_c). chosen_c is the bearing gap that
        selected the grasped object at its parent's check, 0.0 when the grasp
        is the real target itself."""
        chain = [self.target_idx]
        on_chain = {self.target_idx}
        chosen_c = 0.0
        while True:
            acting = chain[-1]
            rep = self.check(acting)
            if rep.free:
                return acting, rep, chosen_c
            nxt = None
            for rank, oid in enumerate(rep.ranking):
                idx = self.index[oid]
                if idx not in on_chain:
                    nxt = idx
                    beta_gap = self._bearing_gap(rep, oid)
                    break
            if nxt is None:
                # every candidate is an ancestor: mutual blocking around the
                # base direction. Grasp the acting target anyway; it is the
                # deepest link of the deadlock and removing it breaks it.
                return acting, rep, chosen_c
            chain.append(nxt)
            on_chain.add(nxt)
            chosen_c = beta_gap

    def _bearing_gap(self, rep: CheckReport, oid: str) -> float:
        idx = self.index[oid]
        tx = float(self.xs[self.index[rep.acting_target_id]])
        ty = float(self.ys[self.index[rep.acting_target_id]])
        bx, by = self.base
        dx = float(self.xs[idx]) - tx
        dy = float(self.ys[idx]) - ty
        beta = math.degrees(math.atan2((by - ty) * dx - (bx - tx) * dy,
                                       (bx - tx) * dx + (by - ty) * dy))
        gap = abs(beta - rep.argmin_sector_deg)
        return min(gap, 360.0 - gap)

    def remove(self, idx: int) -> None:
        self.alive[idx] = False

    def target_alive(self) -> bool:
        return bool(self.alive[self.target_idx])


def accessibility_check(scene: Scene, acting_target_id: str, d_max: float,
                        params: CSpaceParams = CSpaceParams(),
                        cfg: HistogramConfig = HistogramConfig()) -> str:
    """Single check on a scene: the id of the acting target when a zero
    sector exists within the window, otherwise the id of the obstacle whose
    bearing is closest to the least-blocked direction (ties: nearer object,
    then lexicographically smaller id)."""
    if d_max <= 0.0:
        raise ValueError("d_max must be positive")
    state = _State(scene, params, cfg)
    if acting_target_id not in state.index:
        raise KeyError(f"unknown acting target {acting_target_id!r}")
    return state.check(state.index[acting_target_id], d_max_cap=d_max).object_id


def check_report(scene: Scene, acting_target_id: str,
                 d_max: Optional[float] = None,
                 params: CSpaceParams = CSpaceParams(),
                 cfg: HistogramConfig = HistogramConfig()) -> CheckReport:
    """Like accessibility_check but returning the full report; d_max=None
    means the distance to the farthest remaining object."""
    state = _State(scene, params, cfg)
    if acting_target_id not in state.index:
        raise KeyError(f"unknown acting target {acting_target_id!r}")
    return state.check(state.index[acting_target_id], d_max_cap=d_max)


def plan(scene: Scene, params: CSpaceParams = CSpaceParams(),
         cfg: HistogramConfig = HistogramConfig()) -> Plan:
    """Full rearrangement plan: grasps in execution order, ending with the
    target. Each step is decided by a fresh blocker walk from the target on
    the scene as it stands, so the plan equals the sequence of replan_step
    calls on the shrinking scene."""
    state = _State(scene, params, cfg)
    steps: list[PlanStep] = []
    while state.target_alive():
        idx, rep, chosen_c = state.descend()
        record = DecisionRecord(d_max=rep.d_max,
                                argmin_sector=rep.argmin_sector_deg,
                                chosen_c=chosen_c,
                                histogram_min_magnitude=rep.min_magnitude)
        steps.append(PlanStep(object_id=state.ids[idx], record=record))
        state.remove(idx)
    return Plan(steps=tuple(steps))


def replan_step(scene: Scene, params: CSpaceParams = CSpaceParams(),
                cfg: HistogramConfig = HistogramConfig()) -> str:
    """Next object to grasp for the scene as given. Stateless: feed back the
    scene minus the grasped object (with any pose drift) for the next step."""
    state = _State(scene, params, cfg)
    idx, _, _ = state.descend()
    return state.ids[idx]
