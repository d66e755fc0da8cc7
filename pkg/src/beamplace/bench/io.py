"""Versioned file formats: scenario/solution/evaluation JSON, report CSV.

Field names are documented in FORMATS.md at the repository root.
"""

from __future__ import annotations

import csv
import json
import math
from pathlib import Path

from ..errors import EmptyInput, ParseError, ValidationError, VersionMismatch
from ..evaluation import EvaluatedSolution, empirical_cdf
from ..geo import GeodeticPos
from ..rf import AntennaParams, LinkBudgetParams
from ..solve.solution import BeamSolution
from .scenario import BBox, SatelliteConfig, Scenario

SCHEMA_VERSION = 1
SCENARIO_FORMAT = "beamplace-scenario"
SOLUTION_FORMAT = "beamplace-solution"
EVALUATION_FORMAT = "beamplace-evaluation"

REPORT_COLUMNS = [
    "algorithm",
    "K",
    "seed",
    "status",
    "nabs",
    "load_gap",
    "min_scgnr_db",
    "avg_scgnr_db",
    "moves_used",
    "iterations_used",
    "wall_time_ms",
    "error",
]
TIMING_COLUMNS = ("wall_time_ms", "mean_wall_time_ms")


def _load_json(path, expected_format):
    path = Path(path)
    try:
        text = path.read_text()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}") from exc
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path}: {exc.msg}", line=exc.lineno) from exc
    if not isinstance(doc, dict):
        raise ParseError(f"{path}: top level must be an object")
    fmt = doc.get("format")
    if fmt != expected_format:
        raise ParseError(f"{path}: expected format {expected_format!r}, got {fmt!r}", field="format")
    if doc.get("version") != SCHEMA_VERSION:
        raise VersionMismatch(f"{path}: unsupported schema version {doc.get('version')!r}", field="version")
    return doc


def _get(doc, key, kind=None, where=""):
    name = f"{where}.{key}" if where else key
    if key not in doc:
        raise ParseError("missing required field", field=name)
    value = doc[key]
    if kind is float and isinstance(value, int) and not isinstance(value, bool):
        value = float(value)
    if kind is not None and not isinstance(value, kind):
        raise ParseError(f"expected {kind.__name__}", field=name)
    return value


def _dump(doc, path):
    Path(path).write_text(json.dumps(doc, indent=1, allow_nan=True) + "\n")


def scenario_to_dict(sc: Scenario) -> dict:
    ant = sc.link_budget.antenna
    return {
        "format": SCENARIO_FORMAT,
        "version": SCHEMA_VERSION,
        "label": sc.label,
        "seed": sc.seed,
        "alpha_max_deg": math.degrees(sc.alpha_max),
        "bbox": {"lat": list(sc.bbox.lat), "lon": list(sc.bbox.lon)},
        "satellite": {"lat": sc.satellite.lat, "lon": sc.satellite.lon, "alt_km": sc.satellite.alt_km},
        "link_budget": {
            "wavelength_m": ant.wavelength,
            "aperture_radius_m": ant.aperture_radius,
            "dish_diameter_m": ant.dish_diameter,
            "g_max": ant.g_max,
            "efficiency": ant.efficiency,
            "hpbw_rad": ant.hpbw,
            "atmospheric_loss": sc.link_budget.atmospheric_loss,
            "noise_power_w": sc.link_budget.noise_power,
        },
        "users": [[u.lat, u.lon] for u in sc.users],
    }


def scenario_from_dict(doc: dict) -> Scenario:
    sat = _get(doc, "satellite", dict)
    lb = _get(doc, "link_budget", dict)
    box = _get(doc, "bbox", dict)
    users = _get(doc, "users", list)
    parsed = []
    for i, u in enumerate(users):
        if not (isinstance(u, list) and len(u) == 2 and all(isinstance(v, (int, float)) for v in u)):
            raise ParseError("user must be a [lat, lon] pair", field=f"users[{i}]")
        parsed.append(GeodeticPos(float(u[0]), float(u[1])))
    antenna = AntennaParams(
        wavelength=_get(lb, "wavelength_m", float, "link_budget"),
        aperture_radius=_get(lb, "aperture_radius_m", float, "link_budget"),
        dish_diameter=_get(lb, "dish_diameter_m", float, "link_budget"),
        g_max=_get(lb, "g_max", float, "link_budget"),
        efficiency=_get(lb, "efficiency", float, "link_budget"),
        hpbw=_get(lb, "hpbw_rad", float, "link_budget"),
    )
    return Scenario(
        users=tuple(parsed),
        satellite=SatelliteConfig(
            _get(sat, "lat", float, "satellite"),
            _get(sat, "lon", float, "satellite"),
            _get(sat, "alt_km", float, "satellite"),
        ),
        link_budget=LinkBudgetParams(
            antenna,
            _get(lb, "atmospheric_loss", float, "link_budget"),
            _get(lb, "noise_power_w", float, "link_budget"),
        ),
        alpha_max=math.radians(_get(doc, "alpha_max_deg", float)),
        seed=_get(doc, "seed", int),
        label=_get(doc, "label", str),
        bbox=BBox(tuple(_get(box, "lat", list, "bbox")), tuple(_get(box, "lon", list, "bbox"))),
    )


def write_scenario(sc: Scenario, path) -> None:
    _dump(scenario_to_dict(sc), path)


def read_scenario(path) -> Scenario:
    """Load a scenario; invalid contents raise :class:`ValidationError`."""
    return scenario_from_dict(_load_json(path, SCENARIO_FORMAT))


def write_solution(sol: BeamSolution, path, wall_time_ms=float("nan"), **extra) -> None:
    doc = {
        "format": SOLUTION_FORMAT,
        "version": SCHEMA_VERSION,
        "algorithm": sol.algorithm,
        "seed": sol.seed,
        "n_users": sol.n_users,
        "n_beams": sol.n_beams,
        "iterations_used": sol.iterations_used,
        "moves_used": sol.moves_used,
        "wall_time_ms": wall_time_ms,
        "clusters": [list(c) for c in sol.clusters],
    }
    doc.update(extra)
    _dump(doc, path)


def read_solution(path) -> tuple[BeamSolution, dict]:
    """Returns the solution and the raw document (for optional fields)."""
    doc = _load_json(path, SOLUTION_FORMAT)
    clusters = _get(doc, "clusters", list)
    for i, c in enumerate(clusters):
        if not (isinstance(c, list) and all(isinstance(k, int) for k in c)):
            raise ParseError("cluster must be a list of user ids", field=f"clusters[{i}]")
    sol = BeamSolution(
        tuple(tuple(sorted(c)) for c in clusters),
        algorithm=_get(doc, "algorithm", str),
        seed=_get(doc, "seed", int),
        iterations_used=_get(doc, "iterations_used", int),
        moves_used=_get(doc, "moves_used", int),
    )
    sol.validate(_get(doc, "n_users", int))
    return sol, doc


def write_evaluation(ev: EvaluatedSolution, path, **extra) -> None:
    doc = {"format": EVALUATION_FORMAT, "version": SCHEMA_VERSION}
    doc.update(extra)
    doc.update(ev.as_dict())
    _dump(doc, path)


def _fmt(value):
    if isinstance(value, float):
        return repr(value)
    return "" if value is None else str(value)


def write_csv(rows, columns, path) -> None:
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(columns)
        for row in rows:
            w.writerow([_fmt(row.get(c)) for c in columns])


_INT_COLUMNS = {"K", "seed", "nabs", "load_gap", "moves_used", "iterations_used"}
_FLOAT_COLUMNS = {"min_scgnr_db", "avg_scgnr_db", "wall_time_ms"}


def read_report(path) -> list[dict]:
    """Parse a report CSV back into typed row dicts."""
    try:
        fh = open(path, newline="")
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}") from exc
    with fh:
        reader = csv.DictReader(fh)
        if reader.fieldnames is None:
            raise ParseError(f"{path}: empty report", line=1)
        missing = [c for c in REPORT_COLUMNS if c not in reader.fieldnames]
        if missing:
            raise ParseError(f"{path}: missing report column", field=missing[0], line=1)
        rows = []
        for line, raw in enumerate(reader, start=2):
            row = dict(raw)
            for c in REPORT_COLUMNS:
                v = raw[c]
                try:
                    if c in _INT_COLUMNS:
                        row[c] = int(v) if v != "" else None
                    elif c in _FLOAT_COLUMNS:
                        row[c] = float(v) if v != "" else None
                except ValueError as exc:
                    raise ParseError(f"{path}: bad value {v!r}", field=c, line=line) from exc
            rows.append(row)
    return rows


CDF_METRICS = {"avg_scgnr": "avg_scgnr_db", "min_scgnr": "min_scgnr_db"}


def export_cdf(rows, metric: str, path) -> list[tuple[float, float]]:
    """Write the empirical CDF of ``metric`` over successful report rows."""
    try:
        column = CDF_METRICS[metric]
    except KeyError:
        raise ValidationError(f"unknown metric {metric!r}; choose from {sorted(CDF_METRICS)}") from None
    values = [r[column] for r in rows if r.get("status", "ok") == "ok" and r.get(column) is not None]
    if not values:
        raise EmptyInput("no report rows with a value for the CDF")
    points = empirical_cdf(values)
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(["value_db", "cumulative_fraction"])
        for x, f in points:
            w.writerow([repr(x), repr(f)])
    return points
