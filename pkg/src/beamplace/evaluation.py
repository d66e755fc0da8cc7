"""Beam centres and solution metrics."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import rf
from .errors import EmptyCluster, EmptyInput, InvalidInput
from .geo import EARTH_RADIUS_KM, GeodeticPos, apex_angle, ecef_to_geodetic, slant_range
from .solve.solution import BeamSolution


def beam_center(points, radius: float = EARTH_RADIUS_KM) -> np.ndarray:
    """Centroid of member positions pushed back out to the Earth's surface."""
    pts = np.atleast_2d(np.asarray(points, dtype=float))
    if pts.shape[0] == 0:
        raise EmptyCluster("cannot place a beam for an empty cluster")
    if pts.shape[0] == 1:
        return pts[0].copy()
    c = pts.mean(axis=0)
    norm = np.linalg.norm(c)
    if norm == 0.0:
        raise InvalidInput("members are centred on the Earth's centre")
    return c * (radius / norm)


@dataclass(frozen=True)
class EvaluatedSolution:
    nabs: int
    load_gap: int
    per_user_scgnr_db: np.ndarray
    per_user_angle: np.ndarray
    min_scgnr_db: float
    avg_scgnr_db: float
    beam_centers: tuple[GeodeticPos, ...]
    wall_time_ms: float = float("nan")

    def as_dict(self) -> dict:
        return {
            "nabs": self.nabs,
            "load_gap": self.load_gap,
            "min_scgnr_db": self.min_scgnr_db,
            "avg_scgnr_db": self.avg_scgnr_db,
            "wall_time_ms": self.wall_time_ms,
            "per_user_scgnr_db": self.per_user_scgnr_db.tolist(),
            "per_user_angle_deg": np.degrees(self.per_user_angle).tolist(),
            "beam_centers": [{"lat": c.lat, "lon": c.lon} for c in self.beam_centers],
        }


def evaluate(sol: BeamSolution, users, sat, lb: rf.LinkBudgetParams, wall_time_ms: float = float("nan")) -> EvaluatedSolution:
    """Place every beam at its members' centre and compute per-user SCGNR.

    The average SCGNR is the mean of the per-user dB values.
    """
    users = np.atleast_2d(np.asarray(users, dtype=float))
    sol.validate(users.shape[0])
    centers = np.empty((sol.n_beams, 3))
    serving = np.empty((users.shape[0], 3))
    for b, members in enumerate(sol.clusters):
        centers[b] = beam_center(users[list(members)])
        serving[list(members)] = centers[b]
    angle = apex_angle(users, serving, sat)
    s = slant_range(users, sat)
    scgnr_db = rf.db(rf.scgnr(angle, s, lb))
    lat, lon, _ = ecef_to_geodetic(centers)
    return EvaluatedSolution(
        nabs=sol.n_beams,
        load_gap=sol.load_gap,
        per_user_scgnr_db=scgnr_db,
        per_user_angle=angle,
        min_scgnr_db=float(scgnr_db.min()),
        avg_scgnr_db=float(scgnr_db.mean()),
        beam_centers=tuple(GeodeticPos(float(a), float(o)) for a, o in zip(lat, lon)),
        wall_time_ms=wall_time_ms,
    )


def cdf_points(values_db, grid) -> list[tuple[float, float]]:
    """Empirical CDF ``F(x) = #{v <= x} / n`` evaluated on ``grid``."""
    v = np.sort(np.asarray(values_db, dtype=float).ravel())
    if v.size == 0:
        raise EmptyInput("no values for a CDF")
    g = np.asarray(grid, dtype=float)
    if np.any(np.diff(g) < 0):
        raise InvalidInput("grid must be sorted")
    f = np.searchsorted(v, g, side="right") / v.size
    return list(zip(g.tolist(), f.tolist()))


def empirical_cdf(values_db) -> list[tuple[float, float]]:
    """CDF evaluated at each distinct sample value."""
    v = np.asarray(values_db, dtype=float).ravel()
    if v.size == 0:
        raise EmptyInput("no values for a CDF")
    return cdf_points(v, np.unique(v))
