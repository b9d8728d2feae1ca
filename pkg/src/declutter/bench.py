"""Benchmark campaigns: run each method over a grid of scene sizes and seeds,
collect relocation counts, decision times, and (for small scenes) the
enumerated optimum, and summarize per method and size.

Scenes are generated once per (n_objects, seed) cell and shared by every
method. The Gaussian threshold is either pinned or picked per scene size by a
small grid search that only considers thresholds whose runs all end with a
genuinely clear grasp.
"""

from __future__ import annotations

import statistics
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, replace
from typing import Iterable, Optional, Sequence

from .baselines import GaussianParams
from .cspace import CSpaceParams
from .histogram import HistogramConfig
from .oracle import ENUMERATION_LIMIT, min_relocation_set
from .scene import GenSpec, generate
from .sim import SimConfig, run

CSV_HEADER = "method,n_objects,seed,relocations,oracle_k,mean_decision_time,success"

TAU_GRID = (0.05, 0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 1.0, 1.5, 2.0)


@dataclass(frozen=True)
class BenchRecord:
    method: str
    n_objects: int
    seed: int
    relocations: int
    oracle_k: Optional[int]
    mean_decision_time: float
    success: bool

    def csv_row(self) -> str:
        k = "" if self.oracle_k is None else str(self.oracle_k)
        return (f"{self.method},{self.n_objects},{self.seed},"
                f"{self.relocations},{k},{self.mean_decision_time:.6g},"
                f"{str(self.success).lower()}")


@dataclass(frozen=True)
class BenchSummary:
    method: str
    n_objects: int
    runs: int
    mean_relocations: float
    std_relocations: float
    mean_decision_time: float
    success_rate: float
    tau: Optional[float] = None  # Gaussian threshold used for this size


def _scene_for(n: int, seed: int, gen: GenSpec):
    return generate(replace(gen, n_objects=n, seed=seed))


def run_cell(method: str, n: int, seed: int, gen: GenSpec,
             params: CSpaceParams, cfg: HistogramConfig, gp: GaussianParams,
             perturbation: float = 0.0,
             oracle_limit: int = ENUMERATION_LIMIT) -> BenchRecord:
    """One (method, size, seed) benchmark run on a freshly generated scene."""
    scene = _scene_for(n, seed, gen)
    sim_cfg = SimConfig(perturbation=perturbation, seed=seed)
    result = run(scene, method=method, params=params, sim_cfg=sim_cfg,
                 cfg=cfg, gp=gp)
    times = [dt for _, dt in result.decisions]
    mean_dt = sum(times) / len(times) if times else 0.0
    oracle_k = None
    if n <= oracle_limit:
        oracle_k, _ = min_relocation_set(scene, params=params,
                                         window=cfg.window)
    return BenchRecord(method=method, n_objects=n, seed=seed,
                       relocations=result.relocations, oracle_k=oracle_k,
                       mean_decision_time=mean_dt, success=result.success)


def _run_cells(cells: Sequence[tuple], jobs: int) -> list[BenchRecord]:
    if jobs <= 1:
        return [run_cell(*c) for c in cells]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(run_cell, *zip(*cells)))


def pick_tau(n: int, seeds: Sequence[int], gen: GenSpec, params: CSpaceParams,
             cfg: HistogramConfig, sigma_scale: float,
             grid: Sequence[float] = TAU_GRID, jobs: int = 1,
             perturbation: float = 0.0) -> tuple[float, list[BenchRecord]]:
    """Best Gaussian threshold for one scene size: among thresholds whose
    every run succeeds, the one with the fewest mean relocations (ties: the
    smaller threshold); if none is fully successful, the highest success
    rate wins. Returns the winner and its records."""
    by_tau: dict[float, list[BenchRecord]] = {}
    cells = [("gaussian", n, seed, gen, params, cfg,
              GaussianParams(threshold=tau, sigma_scale=sigma_scale),
              perturbation)
             for tau in grid for seed in seeds]
    records = _run_cells(cells, jobs)
    for cell, rec in zip(cells, records):
        by_tau.setdefault(cell[6].threshold, []).append(rec)

    def score(tau: float) -> tuple:
        recs = by_tau[tau]
        ok = sum(r.success for r in recs) / len(recs)
        mean = sum(r.relocations for r in recs) / len(recs)
        return (-ok, mean, tau)

    best = min(by_tau, key=score)
    return best, by_tau[best]


def run_campaign(methods: Sequence[str], sizes: Sequence[int],
                 seeds: Sequence[int], gen: GenSpec = GenSpec(n_objects=1),
                 params: CSpaceParams = CSpaceParams(),
                 cfg: HistogramConfig = HistogramConfig(),
                 sigma_scale: float = 1.0, tau: Optional[float] = None,
                 perturbation: float = 0.0,
                 jobs: int = 1) -> tuple[list[BenchRecord], list[BenchSummary]]:
    """Full campaign over methods x sizes x seeds. Records are ordered by
    method (as given), then size, then seed."""
    chosen_tau: dict[int, float] = {}
    gaussian_recs: dict[int, list[BenchRecord]] = {}
    if "gaussian" in methods:
        for n in sizes:
            if tau is not None:
                chosen_tau[n] = tau
                cells = [("gaussian", n, seed, gen, params, cfg,
                          GaussianParams(threshold=tau,
                                         sigma_scale=sigma_scale),
                          perturbation)
                         for seed in seeds]
                gaussian_recs[n] = _run_cells(cells, jobs)
            else:
                chosen_tau[n], gaussian_recs[n] = pick_tau(
                    n, seeds, gen, params, cfg, sigma_scale, jobs=jobs,
                    perturbation=perturbation)

    records: list[BenchRecord] = []
    for method in methods:
        for n in sizes:
            if method == "gaussian":
                records.extend(gaussian_recs[n])
                continue
            cells = [(method, n, seed, gen, params, cfg, GaussianParams(),
                      perturbation)
                     for seed in seeds]
            records.extend(_run_cells(cells, jobs))

    summaries = []
    for method in methods:
        for n in sizes:
            recs = [r for r in records
                    if r.method == method and r.n_objects == n]
            relocs = [r.relocations for r in recs]
            summaries.append(BenchSummary(
                method=method, n_objects=n, runs=len(recs),
                mean_relocations=statistics.fmean(relocs),
                std_relocations=(statistics.stdev(relocs)
                                 if len(relocs) > 1 else 0.0),
                mean_decision_time=statistics.fmean(
                    r.mean_decision_time for r in recs),
                success_rate=sum(r.success for r in recs) / len(recs),
                tau=chosen_tau.get(n) if method == "gaussian" else None))
    return records, summaries


def to_csv(records: Iterable[BenchRecord],
           summaries: Iterable[BenchSummary] = ()) -> str:
    lines = [CSV_HEADER]
    lines.extend(r.csv_row() for r in records)
    for s in summaries:
        tau = "" if s.tau is None else f" tau={s.tau:g}"
        lines.append(
            f"# {s.method} n={s.n_objects}: "
            f"relocations {s.mean_relocations:.2f} +- {s.std_relocations:.2f}"
            f" over {s.runs} runs, mean decision {s.mean_decision_time:.4g} s,"
            f" success {s.success_rate:.0%}{tau}")
    return "\n".join(lines) + "\n"
