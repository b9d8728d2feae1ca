"""Scene model: circular objects on a planar workspace, random instance
generation, and the JSON scene-file format."""

from __future__ import annotations

import json
import math
import random
from dataclasses import dataclass, replace
from typing import Optional

DEFAULT_SIDE = 0.5            # workspace edge length, m
DEFAULT_DIAMETERS = (0.06, 0.075)  # uniform diameter range, m
DEFAULT_MIN_GAP = 0.005       # physical clearance between placed disks, m
BASE_OFFSET = 0.05            # robot base sits this far outside the open edge, m
REJECTION_BUDGET = 10_000     # placement attempts per disk before giving up


class SceneFormatError(ValueError):
    """Scene text could not be parsed or violates a scene invariant."""


class PlacementInfeasibleError(RuntimeError):
    """Random generation saturated its rejection budget (density too high)."""


@dataclass(frozen=True)
class ObjectDisk:
    id: str
    x: float
    y: float
    radius: float

    @property
    def center(self) -> tuple[float, float]:
        return (self.x, self.y)

    def distance_to(self, other: "ObjectDisk") -> float:
        return math.hypot(self.x - other.x, self.y - other.y)


@dataclass(frozen=True)
class Rect:
    xmin: float
    ymin: float
    xmax: float
    ymax: float

    def contains_point(self, x: float, y: float) -> bool:
        return self.xmin <= x <= self.xmax and self.ymin <= y <= self.ymax

    def strictly_inside(self, x: float, y: float) -> bool:
        return self.xmin < x < self.xmax and self.ymin < y < self.ymax

    def contains_disk(self, d: ObjectDisk) -> bool:
        return (self.xmin + d.radius <= d.x <= self.xmax - d.radius
                and self.ymin + d.radius <= d.y <= self.ymax - d.radius)


@dataclass(frozen=True)
class Scene:
    workspace: Rect
    base: tuple[float, float]
    objects: tuple[ObjectDisk, ...]
    target_id: str

    def __post_init__(self):
        self.validate()

    def validate(self) -> None:
        ids = [o.id for o in self.objects]
        if len(set(ids)) != len(ids):
            dup = sorted({i for i in ids if ids.count(i) > 1})
            raise SceneFormatError(f"duplicate object id(s): {', '.join(dup)}")
        if ids.count(self.target_id) != 1:
            raise SceneFormatError(
                f"target_id {self.target_id!r} does not name exactly one object")
        for o in self.objects:
            if o.radius <= 0:
                raise SceneFormatError(f"object {o.id!r}: radius must be > 0")
            if not self.workspace.contains_point(o.x, o.y):
                raise SceneFormatError(
                    f"object {o.id!r}: center ({o.x}, {o.y}) outside workspace")
        bx, by = self.base
        if self.workspace.strictly_inside(bx, by):
            raise SceneFormatError(
                f"base ({bx}, {by}) must lie on or outside a workspace edge")

    @property
    def target(self) -> ObjectDisk:
        return self.by_id(self.target_id)

    def by_id(self, object_id: str) -> ObjectDisk:
        for o in self.objects:
            if o.id == object_id:
                return o
        raise KeyError(object_id)

    def has_object(self, object_id: str) -> bool:
        return any(o.id == object_id for o in self.objects)

    def without(self, object_id: str) -> "Scene":
        """Scene with one object deleted (relocated out of the workspace)."""
        if not self.has_object(object_id):
            raise KeyError(object_id)
        if object_id == self.target_id:
            raise ValueError("cannot delete the target from a scene")
        kept = tuple(o for o in self.objects if o.id != object_id)
        return replace(self, objects=kept)

    def obstacles(self, acting_target_id: Optional[str] = None) -> tuple[ObjectDisk, ...]:
        tid = acting_target_id if acting_target_id is not None else self.target_id
        if not self.has_object(tid):
            raise KeyError(tid)
        return tuple(o for o in self.objects if o.id != tid)

    def __len__(self) -> int:
        return len(self.objects)


@dataclass(frozen=True)
class GenSpec:
    n_objects: int
    workspace_side: float = DEFAULT_SIDE
    diameter_range: tuple[float, float] = DEFAULT_DIAMETERS
    seed: int = 0
    min_gap: float = DEFAULT_MIN_GAP
    target_id: Optional[str] = None  # pin the target; default: uniform random pick

    def __post_init__(self):
        if self.n_objects < 1:
            raise ValueError("n_objects must be >= 1")
        lo, hi = self.diameter_range
        if lo <= 0 or hi < lo:
            raise ValueError(f"bad diameter range ({lo}, {hi})")
        if self.workspace_side <= 0:
            raise ValueError("workspace_side must be > 0")
        if self.min_gap < 0:
            raise ValueError("min_gap must be >= 0")


def generate(spec: GenSpec) -> Scene:
    """Generate a random scene: disks dropped uniformly into the square
    workspace, rejection-sampled so every pair keeps a physical clearance of
    min_gap. Same spec (including seed) reproduces the scene exactly.

    Raises PlacementInfeasibleError when a disk cannot be placed within the
    rejection budget, which signals an over-dense request.
    """
    rng = random.Random(spec.seed)
    side = spec.workspace_side
    lo, hi = spec.diameter_range
    ws = Rect(0.0, 0.0, side, side)

    placed: list[ObjectDisk] = []
    width = len(str(spec.n_objects - 1)) if spec.n_objects > 1 else 1
    for i in range(spec.n_objects):
        radius = rng.uniform(lo, hi) / 2.0
        if 2 * radius > side:
            raise PlacementInfeasibleError(
                f"disk diameter {2 * radius:.4f} m exceeds workspace side {side} m")
        oid = f"obj{i:0{width}d}"
        for _ in range(REJECTION_BUDGET):
            x = rng.uniform(radius, side - radius)
            y = rng.uniform(radius, side - radius)
            cand = ObjectDisk(oid, x, y, radius)
            if all(cand.distance_to(p) >= cand.radius + p.radius + spec.min_gap
                   for p in placed):
                placed.append(cand)
                break
        else:
            raise PlacementInfeasibleError(
                f"could not place disk {i + 1}/{spec.n_objects} after "
                f"{REJECTION_BUDGET} attempts; "
                f"requested density is infeasible for a {side} m workspace")

    if spec.target_id is not None:
        if not any(o.id == spec.target_id for o in placed):
            raise ValueError(f"pinned target_id {spec.target_id!r} was not generated")
        target_id = spec.target_id
    else:
        target_id = placed[rng.randrange(len(placed))].id

    base = (side / 2.0, -BASE_OFFSET)
    return Scene(workspace=ws, base=base, objects=tuple(placed), target_id=target_id)


_SCENE_KEYS = {"workspace", "base", "target_id", "objects"}
_WS_KEYS = {"xmin", "ymin", "xmax", "ymax"}
_BASE_KEYS = {"x", "y"}
_OBJ_KEYS = {"id", "x", "y", "radius"}


def _check_keys(d: dict, allowed: set, where: str) -> None:
    unknown = sorted(set(d) - allowed)
    if unknown:
        raise SceneFormatError(f"{where}: unknown field(s) {', '.join(unknown)}")
    missing = sorted(allowed - set(d))
    if missing:
        raise SceneFormatError(f"{where}: missing field(s) {', '.join(missing)}")


def load_scene(text: str) -> Scene:
    """Parse the scene-file format. Unknown fields are rejected."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SceneFormatError(f"invalid scene JSON: {exc}") from exc
    if not isinstance(doc, dict):
        raise SceneFormatError("scene file must be a JSON object")
    _check_keys(doc, _SCENE_KEYS, "scene")
    _check_keys(doc["workspace"], _WS_KEYS, "workspace")
    _check_keys(doc["base"], _BASE_KEYS, "base")
    ws = Rect(float(doc["workspace"]["xmin"]), float(doc["workspace"]["ymin"]),
              float(doc["workspace"]["xmax"]), float(doc["workspace"]["ymax"]))
    if not isinstance(doc["objects"], list):
        raise SceneFormatError("objects: expected a list")
    objects = []
    for i, entry in enumerate(doc["objects"]):
        _check_keys(entry, _OBJ_KEYS, f"objects[{i}]")
        if not isinstance(entry["id"], str):
            raise SceneFormatError(f"objects[{i}]: id must be a string")
        objects.append(ObjectDisk(entry["id"], float(entry["x"]),
                                  float(entry["y"]), float(entry["radius"])))
    return Scene(workspace=ws,
                 base=(float(doc["base"]["x"]), float(doc["base"]["y"])),
                 objects=tuple(objects),
                 target_id=doc["target_id"])


def save_scene(scene: Scene) -> str:
    """Serialize to the scene-file format (stable field order, repr floats)."""
    doc = {
        "workspace": {"xmin": scene.workspace.xmin, "ymin": scene.workspace.ymin,
                      "xmax": scene.workspace.xmax, "ymax": scene.workspace.ymax},
        "base": {"x": scene.base[0], "y": scene.base[1]},
        "target_id": scene.target_id,
        "objects": [{"id": o.id, "x": o.x, "y": o.y, "radius": o.radius}
                    for o in scene.objects],
    }
    return json.dumps(doc, indent=2) + "\n"
