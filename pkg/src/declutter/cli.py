"""Command-line interface.

Subcommands: gen (random scene), plan (single-scene plan), bench (campaign
over methods x sizes x seeds), oracle (enumerated minimum relocation set),
render (SVG), sim (one simulated episode).

Exit codes: 0 success, 1 planner/run failure, 2 input or configuration error.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from typing import Optional, Sequence

from . import bench as bench_mod
from .baselines import (DEFAULT_TAU, GaussianParams, gaussian_plan,
                        straight_line_plan)
from .cspace import CSpaceParams
from .histogram import (DEFAULT_ALPHA, DEFAULT_CELL, DEFAULT_WINDOW,
                        HistogramConfig, total_histogram)
from .oracle import min_relocation_set
from .planner import Plan, PlanStep, plan as plan_scene
from .render import render_svg
from .scene import (GenSpec, PlacementInfeasibleError, Scene,
                    SceneFormatError, generate, load_scene, save_scene)
from .sim import METHODS, SimConfig, run as run_sim


def _common_flags() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--safety-margin", type=float, default=0.01,
                   metavar="M", help="safety margin r_s in meters")
    p.add_argument("--gripper-radius", type=float, default=0.04,
                   metavar="R", help="gripper finger radius r_g in meters")
    p.add_argument("--alpha", type=float, default=DEFAULT_ALPHA,
                   help="sector width in degrees")
    p.add_argument("--window", type=float, default=DEFAULT_WINDOW,
                   help="approach half-window in degrees")
    p.add_argument("--cell", type=float, default=DEFAULT_CELL,
                   help="map cell size in meters")
    p.add_argument("--tau", type=float, default=None,
                   help="Gaussian density threshold (bench default: grid search)")
    p.add_argument("--sigma-scale", type=float, default=1.0,
                   help="Gaussian sigma as a multiple of the subtended half-angle")
    p.add_argument("--perturbation", type=float, default=0.0,
                   metavar="D", help="per-step pose jitter bound in meters")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--format", choices=("json", "csv"), default=None,
                   help="output format where both make sense")
    p.add_argument("-o", "--output", metavar="FILE", default=None,
                   help="write output here instead of stdout")
    return p


def _emit(text: str, path: Optional[str]) -> None:
    if path is None:
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def _read_scene(path: str) -> Scene:
    with open(path, "r", encoding="utf-8") as fh:
        return load_scene(fh.read())


def _params(args) -> CSpaceParams:
    return CSpaceParams(r_s=args.safety_margin, r_g=args.gripper_radius)


def _hist_cfg(args) -> HistogramConfig:
    return HistogramConfig(alpha=args.alpha, window=args.window,
                           cell=args.cell)


def _gaussian(args) -> GaussianParams:
    tau = args.tau if args.tau is not None else DEFAULT_TAU
    return GaussianParams(threshold=tau, sigma_scale=args.sigma_scale)


def _json_text(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def cmd_gen(args) -> int:
    spec = GenSpec(n_objects=args.n, workspace_side=args.side,
                   diameter_range=(args.diam_min, args.diam_max),
                   seed=args.seed, min_gap=args.min_gap,
                   target_id=args.target_id)
    scene = generate(spec)
    _emit(save_scene(scene), args.output)
    return 0


def _plan_for(method: str, scene, args) -> Plan:
    if method == "proposed":
        return plan_scene(scene, params=_params(args), cfg=_hist_cfg(args))
    if method == "baseline":
        return straight_line_plan(scene, params=_params(args))
    return gaussian_plan(scene, gp=_gaussian(args), params=_params(args),
                         cfg=_hist_cfg(args))


def cmd_plan(args) -> int:
    scene = _read_scene(args.scene)
    result = _plan_for(args.method, scene, args)
    if args.format == "csv":
        lines = ["object_id,d_max,argmin_sector,chosen_c,histogram_min_magnitude"]
        for step in result.steps:
            if step.record is None:
                lines.append(f"{step.object_id},,,,")
            else:
                r = step.record
                lines.append(f"{step.object_id},{r.d_max:.6g},"
                             f"{r.argmin_sector:.6g},{r.chosen_c:.6g},"
                             f"{r.histogram_min_magnitude:.6g}")
        _emit("\n".join(lines) + "\n", args.output)
    else:
        obj = {"method": args.method, **result.to_json_obj()}
        _emit(_json_text(obj), args.output)
    return 0


def cmd_bench(args) -> int:
    methods = [m.strip() for m in args.methods.split(",") if m.strip()]
    for m in methods:
        if m not in METHODS:
            raise ValueError(f"unknown method {m!r}; expected one of {METHODS}")
    sizes = [int(tok) for tok in args.n.split(",") if tok.strip()]
    if not methods or not sizes or args.seeds < 1:
        raise ValueError("need at least one method, one size, and one seed")
    seeds = list(range(args.seed, args.seed + args.seeds))
    gen = GenSpec(n_objects=max(sizes), workspace_side=args.side)
    records, summaries = bench_mod.run_campaign(
        methods, sizes, seeds, gen=gen, params=_params(args),
        cfg=_hist_cfg(args), sigma_scale=args.sigma_scale, tau=args.tau,
        perturbation=args.perturbation, jobs=args.jobs)
    if args.format == "json":
        obj = {
            "records": [r.__dict__.copy() for r in records],
            "summaries": [s.__dict__.copy() for s in summaries],
        }
        _emit(_json_text(obj), args.output)
    else:
        _emit(bench_mod.to_csv(records, summaries), args.output)
    return 0


def cmd_oracle(args) -> int:
    scene = _read_scene(args.scene)
    k, witness = min_relocation_set(scene, params=_params(args),
                                    window=args.window)
    names = sorted(witness)
    if args.format == "csv":
        _emit("k,witness\n" + f"{k},{';'.join(names)}\n", args.output)
    else:
        _emit(_json_text({"k": k, "witness": names}), args.output)
    return 0


def _load_plan_file(path: str) -> Plan:
    with open(path, "r", encoding="utf-8") as fh:
        obj = json.load(fh)
    try:
        steps = tuple(PlanStep(object_id=s["object_id"]) for s in obj["steps"])
    except (KeyError, TypeError) as exc:
        raise SceneFormatError(f"{path}: not a plan file ({exc})") from exc
    return Plan(steps=steps)


def cmd_render(args) -> int:
    scene = _read_scene(args.scene)
    the_plan = _load_plan_file(args.plan) if args.plan else None
    hist = None
    if args.histogram or args.histogram_csv:
        from .cspace import inflate
        obstacles = inflate(scene, _params(args))
        target = scene.by_id(scene.target_id)
        cfg = _hist_cfg(args)
        d_max = max((math.dist((o.x, o.y), (target.x, target.y))
                     for o in obstacles), default=cfg.cell)
        hist = total_histogram(obstacles, (target.x, target.y), scene.base,
                               cfg.sized(max(d_max, cfg.cell)))
    if args.histogram_csv:
        with open(args.histogram_csv, "w", encoding="utf-8") as fh:
            fh.write(hist.to_csv())
    svg = render_svg(scene, plan=the_plan,
                     histogram=hist if args.histogram else None,
                     show_inflated=args.inflated, params=_params(args))
    _emit(svg, args.output)
    return 0


def cmd_sim(args) -> int:
    scene = _read_scene(args.scene)
    sim_cfg = SimConfig(perturbation=args.perturbation,
                        step_limit=args.step_limit, seed=args.seed)
    result = run_sim(scene, method=args.method, params=_params(args),
                     sim_cfg=sim_cfg, cfg=_hist_cfg(args), gp=_gaussian(args))
    times = [dt for _, dt in result.decisions]
    mean_dt = sum(times) / len(times) if times else 0.0
    if args.format == "csv":
        row = (f"{args.method},{len(scene)},{args.seed},{result.relocations},"
               f",{mean_dt:.6g},{str(result.success).lower()}")
        _emit(bench_mod.CSV_HEADER + "\n" + row + "\n", args.output)
    else:
        obj = {
            "success": result.success,
            "relocations": result.relocations,
            "decisions": [{"object_id": oid, "seconds": dt}
                          for oid, dt in result.decisions],
            "note": result.note,
        }
        _emit(_json_text(obj), args.output)
    return 0 if result.success else 1


def build_parser() -> argparse.ArgumentParser:
    common = _common_flags()
    parser = argparse.ArgumentParser(
        prog="declutter",
        description="Plan which obstacles to relocate to grasp a target "
                    "disk in 2D clutter.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", parents=[common],
                       help="generate a random scene file")
    p.add_argument("--n", type=int, required=True, help="number of objects")
    p.add_argument("--side", type=float, default=0.5,
                   help="square workspace side in meters")
    p.add_argument("--diam-min", type=float, default=0.06)
    p.add_argument("--diam-max", type=float, default=0.075)
    p.add_argument("--min-gap", type=float, default=0.005,
                   help="minimum surface clearance between objects")
    p.add_argument("--target-id", default=None,
                   help="pin the target instead of drawing it")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("plan", parents=[common],
                       help="plan the grasp sequence for one scene")
    p.add_argument("scene", help="scene file")
    p.add_argument("--method", choices=METHODS, default="proposed")
    p.set_defaults(func=cmd_plan)

    p = sub.add_parser("bench", parents=[common],
                       help="benchmark methods over sizes and seeds")
    p.add_argument("--methods", default="proposed,baseline,gaussian",
                   help="comma-separated method names")
    p.add_argument("--n", default="4,6,8,10",
                   help="comma-separated object counts")
    p.add_argument("--seeds", type=int, default=10,
                   help="number of seeds (starting at --seed)")
    p.add_argument("--side", type=float, default=0.5,
                   help="square workspace side in meters")
    p.add_argument("--jobs", type=int, default=1,
                   help="parallel worker processes")
    p.set_defaults(func=cmd_bench)

    p = sub.add_parser("oracle", parents=[common],
                       help="enumerate the minimum relocation set")
    p.add_argument("scene", help="scene file")
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("render", parents=[common],
                       help="render a scene (and optional plan/histogram) as SVG")
    p.add_argument("scene", help="scene file")
    p.add_argument("--plan", default=None, metavar="FILE",
                   help="plan JSON (from the plan subcommand) for order badges")
    p.add_argument("--histogram", action="store_true",
                   help="add the target's polar histogram strip")
    p.add_argument("--inflated", action="store_true",
                   help="draw inflated obstacle outlines")
    p.add_argument("--histogram-csv", default=None, metavar="FILE",
                   help="also dump the histogram as CSV")
    p.set_defaults(func=cmd_render)

    p = sub.add_parser("sim", parents=[common],
                       help="simulate one episode with replanning")
    p.add_argument("scene", help="scene file")
    p.add_argument("--method", choices=METHODS, default="proposed")
    p.add_argument("--step-limit", type=int, default=None)
    p.set_defaults(func=cmd_sim)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (SceneFormatError, PlacementInfeasibleError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
