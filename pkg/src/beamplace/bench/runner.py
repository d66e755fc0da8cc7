"""Experiment driver: one row per (algorithm, K, seed) cell."""

from __future__ import annotations

import math
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field, replace
from pathlib import Path

import numpy as np

from ..compat import build_graph
from ..errors import BeamPlacementError, Infeasible, InvalidInput
from ..evaluation import evaluate
from ..solve import SolverConfig, bk_means, exact_cover, tgbp
from . import io
from .scenario import BBox, SatelliteConfig, Scenario, generate_scenario

ALGORITHMS = ("tgbp", "bkmeans", "exact")


def solve_scenario(sc: Scenario, algorithm: str, cfg: SolverConfig | None = None):
    """Build the graph, then run and time one solver.

    Returns ``(solution, graph, wall_time_ms)``; graph construction is not
    part of the timed region.
    """
    graph = build_graph(sc.user_points, sc.sat_point, sc.alpha_max)
    cfg = SolverConfig(rng_seed=sc.seed) if cfg is None else cfg
    t0 = time.perf_counter()
    if algorithm == "tgbp":
        sol = tgbp(graph)
    elif algorithm == "bkmeans":
        sol = bk_means(sc.user_points, graph, cfg)
    elif algorithm == "exact":
        sol = exact_cover(graph)
    else:
        raise InvalidInput(f"unknown algorithm {algorithm!r}; choose from {ALGORITHMS}")
    wall_ms = (time.perf_counter() - t0) * 1e3
    return replace(sol, seed=cfg.rng_seed), graph, round(wall_ms, 3)


@dataclass(frozen=True)
class MatrixSpec:
    bbox: BBox = BBox()
    satellite: SatelliteConfig = SatelliteConfig()
    alpha_max_deg: float = 3.2
    max_restarts: int = 200
    kmeans_max_iters: int = 500


def run_cell(algorithm: str, n_users: int, seed: int, spec: MatrixSpec = MatrixSpec()) -> dict:
    row = {"algorithm": algorithm, "K": n_users, "seed": seed, "status": "ok", "error": ""}
    try:
        sc = generate_scenario(n_users, seed, spec.bbox, spec.satellite, alpha_max_deg=spec.alpha_max_deg)
        cfg = SolverConfig(max_restarts=spec.max_restarts, kmeans_max_iters=spec.kmeans_max_iters, rng_seed=seed)
        sol, _, wall_ms = solve_scenario(sc, algorithm, cfg)
        ev = evaluate(sol, sc.user_points, sc.sat_point, sc.link_budget, wall_ms)
    except Infeasible as exc:
        row.update(status="infeasible", error=str(exc))
        return row
    except BeamPlacementError as exc:
        row.update(status="error", error=f"{type(exc).__name__}: {exc}")
        return row
    row.update(
        nabs=ev.nabs,
        load_gap=ev.load_gap,
        min_scgnr_db=ev.min_scgnr_db,
        avg_scgnr_db=ev.avg_scgnr_db,
        moves_used=sol.moves_used,
        iterations_used=sol.iterations_used,
        wall_time_ms=ev.wall_time_ms,
    )
    return row


def _run_cell_args(args):
    return run_cell(*args)


@dataclass
class BenchReport:
    rows: list[dict] = field(default_factory=list)

    def ok_rows(self):
        return [r for r in self.rows if r["status"] == "ok"]

    def aggregate(self) -> list[dict]:
        """Means over seeds for each (algorithm, K), in first-seen order."""
        groups: dict[tuple, list[dict]] = {}
        for r in self.rows:
            groups.setdefault((r["algorithm"], r["K"]), []).append(r)
        out = []
        for (alg, k), rows in groups.items():
            ok = [r for r in rows if r["status"] == "ok"]
            entry = {"algorithm": alg, "K": k, "n_rows": len(rows), "n_ok": len(ok)}
            for col in ("nabs", "load_gap", "min_scgnr_db", "avg_scgnr_db", "wall_time_ms"):
                entry[f"mean_{col}"] = float(np.mean([r[col] for r in ok])) if ok else math.nan
            out.append(entry)
        return out

    def mean(self, algorithm: str, n_users: int, column: str) -> float:
        for entry in self.aggregate():
            if entry["algorithm"] == algorithm and entry["K"] == n_users:
                return entry[f"mean_{column}"]
        raise KeyError((algorithm, n_users))

    def write(self, out_dir) -> tuple[Path, Path]:
        out_dir = Path(out_dir)
        out_dir.mkdir(parents=True, exist_ok=True)
        report = out_dir / "report.csv"
        summary = out_dir / "summary.csv"
        io.write_csv(self.rows, io.REPORT_COLUMNS, report)
        io.write_csv(self.aggregate(), SUMMARY_COLUMNS, summary)
        return report, summary


SUMMARY_COLUMNS = [
    "algorithm",
    "K",
    "n_rows",
    "n_ok",
    "mean_nabs",
    "mean_load_gap",
    "mean_min_scgnr_db",
    "mean_avg_scgnr_db",
    "mean_wall_time_ms",
]


def run_matrix(user_counts, seeds, algorithms, spec: MatrixSpec = MatrixSpec(), jobs: int = 1) -> BenchReport:
    """Run every (algorithm, K, seed) cell.

    Rows come out ordered by K, then seed, then algorithm as given,
    independent of ``jobs``. Cells with the same (K, seed) share one
    scenario, so algorithms are compared on identical instances. A failed
    cell is recorded in its row's ``status`` and does not stop the run.
    """
    user_counts, seeds, algorithms = list(user_counts), list(seeds), list(algorithms)
    if not (user_counts and seeds and algorithms):
        raise InvalidInput("user counts, seeds and algorithms must be non-empty")
    for alg in algorithms:
        if alg not in ALGORITHMS:
            raise InvalidInput(f"unknown algorithm {alg!r}; choose from {ALGORITHMS}")
    cells = [(alg, k, s, spec) for k in user_counts for s in seeds for alg in algorithms]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            rows = list(pool.map(_run_cell_args, cells))
    else:
        rows = [run_cell(*c) for c in cells]
    return BenchReport(rows)
