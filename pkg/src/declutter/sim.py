"""Kinematic grasp-sequence simulator.

Runs a replanning policy step by step on a scene, optionally jittering every
object's pose between steps (a stand-in for imperfect perception and for
obstacles disturbed by the arm). Grasped obstacles are removed; the run ends
when the policy grasps the target, which is then checked for an actually
clear approach ray.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass
from typing import Optional

from .baselines import GaussianParams, gaussian_step, straight_line_step
from .cspace import CSpaceParams
from .histogram import HistogramConfig
from .oracle import ray_accessible
from .planner import replan_step
from .scene import ObjectDisk, Scene

METHODS = ("proposed", "baseline", "gaussian")

_PLACEMENT_TRIES = 100


@dataclass(frozen=True)
class SimConfig:
    perturbation: float = 0.0   # max |dx|, |dy| drift per object per step (m)
    reloc_policy: str = "remove"
    step_limit: Optional[int] = None  # default: one grasp per object
    seed: int = 0
    validate_grasp: bool = True

    def __post_init__(self):
        if self.perturbation < 0.0:
            raise ValueError("perturbation must be >= 0")
        if self.reloc_policy != "remove":
            raise ValueError(f"unsupported reloc_policy {self.reloc_policy!r}")
        if self.step_limit is not None and self.step_limit < 1:
            raise ValueError("step_limit must be >= 1")


@dataclass(frozen=True)
class SimResult:
    success: bool
    relocations: int
    decisions: tuple[tuple[str, float], ...]  # (object_id, decision seconds)
    final_scene: Scene
    note: str = ""


def _perturb(scene: Scene, rng: random.Random, amount: float) -> Scene:
    """Jitter each object by up to +-amount per axis, rejecting draws that
    leave the workspace or overlap another object; an object whose draws all
    fail stays put. Objects move one at a time in tuple order."""
    objs = list(scene.objects)
    for i, o in enumerate(objs):
        for _ in range(_PLACEMENT_TRIES):
            nx = o.x + rng.uniform(-amount, amount)
            ny = o.y + rng.uniform(-amount, amount)
            cand = ObjectDisk(id=o.id, x=nx, y=ny, radius=o.radius)
            if not scene.workspace.contains_disk(cand):
                continue
            ok = True
            for j, other in enumerate(objs):
                if j == i:
                    continue
                if cand.distance_to(other) < cand.radius + other.radius:
                    ok = False
                    break
            if ok:
                objs[i] = cand
                break
    return Scene(workspace=scene.workspace, base=scene.base,
                 objects=tuple(objs), target_id=scene.target_id)


def _next_grasp(method: str, scene: Scene, params: CSpaceParams,
                cfg: HistogramConfig, gp: GaussianParams) -> str:
    if method == "proposed":
        return replan_step(scene, params=params, cfg=cfg)
    if method == "baseline":
        return straight_line_step(scene, params=params)
    if method == "gaussian":
        return gaussian_step(scene, gp=gp, params=params, cfg=cfg)
    raise ValueError(f"unknown method {method!r}; expected one of {METHODS}")


def run(scene: Scene, method: str = "proposed",
        params: CSpaceParams = CSpaceParams(),
        sim_cfg: SimConfig = SimConfig(),
        cfg: HistogramConfig = HistogramConfig(),
        gp: GaussianParams = GaussianParams()) -> SimResult:
    """Simulate one rearrangement episode. With perturbation = 0 the decision
    sequence is exactly the offline plan of the chosen method."""
    if method not in METHODS:
        raise ValueError(f"unknown method {method!r}; expected one of {METHODS}")
    rng = random.Random(sim_cfg.seed)
    limit = sim_cfg.step_limit if sim_cfg.step_limit is not None else len(scene)
    current = scene
    decisions: list[tuple[str, float]] = []
    for _ in range(limit):
        if sim_cfg.perturbation > 0.0:
            current = _perturb(current, rng, sim_cfg.perturbation)
        t0 = time.perf_counter()
        pick = _next_grasp(method, current, params, cfg, gp)
        decisions.append((pick, time.perf_counter() - t0))
        if pick == current.target_id:
            note = ""
            success = True
            if sim_cfg.validate_grasp:
                report = ray_accessible(current, params=params, window=cfg.window)
                if not report.accessible:
                    success = False
                    note = "target grasped without a clear approach ray"
            return SimResult(success=success,
                             relocations=len(decisions) - 1,
                             decisions=tuple(decisions),
                             final_scene=current,
                             note=note)
        current = current.without(pick)
    return SimResult(success=False, relocations=len(decisions),
                     decisions=tuple(decisions), final_scene=current,
                     note=f"step limit ({limit}) reached before the target")
