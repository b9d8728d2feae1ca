"""Configuration-space inflation: every obstacle grows by the acting target's
radius, the safety margin and the gripper radius, so the moving target+gripper
body reduces to a point."""

from __future__ import annotations

from dataclasses import dataclass

from .scene import Scene

DEFAULT_SAFETY_MARGIN = 0.01  # m
DEFAULT_GRIPPER_RADIUS = 0.04  # m


@dataclass(frozen=True)
class CSpaceParams:
    r_s: float = DEFAULT_SAFETY_MARGIN   # safety margin
    r_g: float = DEFAULT_GRIPPER_RADIUS  # end-effector radius

    def __post_init__(self):
        if self.r_s < 0:
            raise ValueError("safety margin must be >= 0")
        if self.r_g < 0:
            raise ValueError("gripper radius must be >= 0")


@dataclass(frozen=True)
class InflatedObstacle:
    source_id: str
    x: float
    y: float
    r_total: float

    @property
    def center(self) -> tuple[float, float]:
        return (self.x, self.y)


def inflate(scene: Scene, params: CSpaceParams,
            acting_target_id: str | None = None) -> tuple[InflatedObstacle, ...]:
    """One inflated disk per non-target object, with
    r_total = r_target + r_safety + r_obstacle + r_gripper.

    The acting target defaults to the scene target; during recursive
    planning it is whichever object is currently being cleared, and its own
    radius feeds the sum.
    """
    tid = acting_target_id if acting_target_id is not None else scene.target_id
    if not scene.has_object(tid):
        raise KeyError(f"unknown acting target {tid!r}")
    r_t = scene.by_id(tid).radius
    return tuple(
        InflatedObstacle(o.id, o.x, o.y, r_t + params.r_s + o.radius + params.r_g)
        for o in scene.objects if o.id != tid
    )
