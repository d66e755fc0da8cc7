"""Command-line interface.

Exit codes: 0 success, 2 validation error, 3 solver infeasibility,
4 IO/parse error.
"""

from __future__ import annotations

import argparse
import logging
import math
import sys
from dataclasses import replace
from pathlib import Path

from ..errors import Infeasible, ParseError, ValidationError
from ..evaluation import evaluate
from ..solve import SolverConfig
from . import io
from .runner import ALGORITHMS, MatrixSpec, run_matrix, solve_scenario
from .scenario import DEFAULT_ALPHA_MAX_DEG, DEFAULT_ALTITUDE_KM, SatelliteConfig, generate_scenario

log = logging.getLogger("beamplace")

EXIT_OK, EXIT_VALIDATION, EXIT_INFEASIBLE, EXIT_IO = 0, 2, 3, 4


def _int_list(text):
    try:
        values = [int(v) for v in text.split(",") if v.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None
    if not values:
        raise argparse.ArgumentTypeError("empty list")
    return values


def _alg_list(text):
    values = [v.strip() for v in text.split(",") if v.strip()]
    bad = [v for v in values if v not in ALGORITHMS]
    if bad or not values:
        raise argparse.ArgumentTypeError(f"unknown algorithm(s) {bad}; choose from {', '.join(ALGORITHMS)}")
    return values


def _apply_overrides(sc, alpha_max_deg, altitude_km):
    if alpha_max_deg is not None:
        sc = replace(sc, alpha_max=math.radians(alpha_max_deg))
    if altitude_km is not None:
        sc = replace(sc, satellite=replace(sc.satellite, alt_km=altitude_km))
    return sc


def cmd_generate(args):
    sat = SatelliteConfig(alt_km=args.altitude_km)
    sc = generate_scenario(args.users, args.seed, satellite=sat, alpha_max_deg=args.alpha_max_deg)
    io.write_scenario(sc, args.out)
    log.info("wrote %d users to %s", sc.n_users, args.out)


def cmd_solve(args):
    sc = _apply_overrides(io.read_scenario(args.scenario), args.alpha_max_deg, args.altitude_km)
    seed = sc.seed if args.seed is None else args.seed
    cfg = SolverConfig(max_restarts=args.max_restarts, kmeans_max_iters=args.kmeans_iters, rng_seed=seed)
    sol, _, wall_ms = solve_scenario(sc, args.algorithm, cfg)
    io.write_solution(
        sol,
        args.out,
        wall_time_ms=wall_ms,
        alpha_max_deg=math.degrees(sc.alpha_max),
        altitude_km=sc.satellite.alt_km,
    )
    log.info("%s: %d beams, gap %d, %.3f ms", args.algorithm, sol.n_beams, sol.load_gap, wall_ms)


def cmd_evaluate(args):
    sc = io.read_scenario(args.scenario)
    sol, doc = io.read_solution(args.solution)
    sc = _apply_overrides(sc, doc.get("alpha_max_deg"), doc.get("altitude_km"))
    if sol.n_users != sc.n_users:
        raise ValidationError(f"solution covers {sol.n_users} users, scenario has {sc.n_users}")
    ev = evaluate(sol, sc.user_points, sc.sat_point, sc.link_budget, doc.get("wall_time_ms", math.nan))
    io.write_evaluation(ev, args.out, algorithm=sol.algorithm, label=sc.label)
    log.info("nabs=%d gap=%d min=%.3f dB avg=%.3f dB", ev.nabs, ev.load_gap, ev.min_scgnr_db, ev.avg_scgnr_db)


def cmd_bench(args):
    spec = MatrixSpec(
        satellite=SatelliteConfig(alt_km=args.altitude_km),
        alpha_max_deg=args.alpha_max_deg,
        max_restarts=args.max_restarts,
        kmeans_max_iters=args.kmeans_iters,
    )
    seeds = range(args.seed_offset, args.seed_offset + args.seeds)
    report = run_matrix(args.users, seeds, args.algorithms, spec, jobs=args.jobs)
    paths = report.write(args.out)
    for entry in report.aggregate():
        log.info(
            "%-8s K=%-5d nabs=%.2f gap=%.2f time=%.1f ms",
            entry["algorithm"], entry["K"], entry["mean_nabs"], entry["mean_load_gap"], entry["mean_wall_time_ms"],
        )
    log.info("wrote %s", ", ".join(str(p) for p in paths))


def cmd_export_cdf(args):
    rows = io.read_report(args.report)
    io.export_cdf(rows, args.metric, args.out)


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="beamplace", description="LEO beam placement solvers and benchmarks.")
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", required=True)

    def solver_flags(sp):
        sp.add_argument("--max-restarts", type=int, default=200)
        sp.add_argument("--kmeans-iters", type=int, default=500)

    g = sub.add_parser("generate", help="sample a random scenario")
    g.add_argument("--users", type=int, required=True)
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("--out", type=Path, required=True)
    g.add_argument("--alpha-max-deg", type=float, default=DEFAULT_ALPHA_MAX_DEG)
    g.add_argument("--altitude-km", type=float, default=DEFAULT_ALTITUDE_KM)
    g.set_defaults(func=cmd_generate)

    s = sub.add_parser("solve", help="run one solver on a scenario")
    s.add_argument("--scenario", type=Path, required=True)
    s.add_argument("--algorithm", choices=ALGORITHMS, required=True)
    s.add_argument("--out", type=Path, required=True)
    solver_flags(s)
    s.add_argument("--alpha-max-deg", type=float, default=None, help="override the scenario's beamwidth")
    s.add_argument("--altitude-km", type=float, default=None, help="override the satellite altitude")
    s.add_argument("--seed", type=int, default=None, help="solver seed (default: scenario seed)")
    s.set_defaults(func=cmd_solve)

    e = sub.add_parser("evaluate", help="compute metrics of a solution")
    e.add_argument("--scenario", type=Path, required=True)
    e.add_argument("--solution", type=Path, required=True)
    e.add_argument("--out", type=Path, required=True)
    e.set_defaults(func=cmd_evaluate)

    b = sub.add_parser("bench", help="run the comparison matrix")
    b.add_argument("--users", type=_int_list, default=[10, 20, 30, 50, 100, 200, 500, 1000])
    b.add_argument("--seeds", type=int, default=20, help="number of seeds per user count")
    b.add_argument("--seed-offset", type=int, default=0)
    b.add_argument("--algorithms", type=_alg_list, default=["tgbp", "bkmeans"])
    b.add_argument("--out", type=Path, required=True)
    b.add_argument("--jobs", type=int, default=1)
    b.add_argument("--alpha-max-deg", type=float, default=DEFAULT_ALPHA_MAX_DEG)
    b.add_argument("--altitude-km", type=float, default=DEFAULT_ALTITUDE_KM)
    solver_flags(b)
    b.set_defaults(func=cmd_bench)

    c = sub.add_parser("export-cdf", help="CDF of a report metric as CSV")
    c.add_argument("--report", type=Path, required=True)
    c.add_argument("--metric", choices=sorted(io.CDF_METRICS), required=True)
    c.add_argument("--out", type=Path, required=True)
    c.set_defaults(func=cmd_export_cdf)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_VALIDATION if exc.code else EXIT_OK
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.INFO, format="%(message)s")
    try:
        args.func(args)
    except Infeasible as exc:
        log.error("infeasible: %s", exc)
        return EXIT_INFEASIBLE
    except ParseError as exc:
        log.error("parse error: %s", exc)
        return EXIT_IO
    except ValidationError as exc:
        log.error("invalid input: %s", exc)
        return EXIT_VALIDATION
    except OSError as exc:
        log.error("io error: %s", exc)
        return EXIT_IO
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
