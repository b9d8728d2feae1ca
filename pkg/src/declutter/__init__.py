"""declutter: decide which obstacles to relocate, and in what order, to
grasp a target disk in 2D clutter, using a polar-histogram accessibility
test over inflated obstacles."""

from . import kernel
from .baselines import (GaussianParams, gaussian_plan, gaussian_step,
                        straight_line_plan, straight_line_step)
from .bench import BenchRecord, BenchSummary, run_campaign
from .cspace import CSpaceParams, InflatedObstacle, inflate
from .histogram import (HistogramConfig, PolarHistogram, enlargement_angle,
                        obstacle_histogram, total_histogram)
from .oracle import AccessReport, min_relocation_set, ray_accessible
from .planner import (CheckReport, DecisionRecord, Plan, PlanStep,
                      accessibility_check, check_report, plan, replan_step)
from .render import render_svg
from .scene import (GenSpec, ObjectDisk, PlacementInfeasibleError, Rect,
                    Scene, SceneFormatError, generate, load_scene, save_scene)
from .sim import SimConfig, SimResult, run as simulate

__version__ = "0.1.0"

__all__ = [
    "AccessReport", "BenchRecord", "BenchSummary", "CSpaceParams",
    "CheckReport", "DecisionRecord", "GaussianParams", "GenSpec",
    "HistogramConfig", "InflatedObstacle", "ObjectDisk", "Plan", "PlanStep",
    "PlacementInfeasibleError", "PolarHistogram", "Rect", "Scene",
    "SceneFormatError", "SimConfig", "SimResult", "accessibility_check",
    "check_report", "enlargement_angle", "gaussian_plan", "gaussian_step",
    "generate", "inflate", "kernel", "load_scene", "min_relocation_set",
    "obstacle_histogram", "plan", "ray_accessible", "render_svg",
    "replan_step", "run_campaign", "save_scene", "simulate",
    "straight_line_plan", "straight_line_step", "total_histogram",
]
