"""Reference scenario: users scattered over a lat/lon box, one satellite."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import cached_property

import numpy as np

from ..errors import BadBox, InvalidInput
from ..geo import GeodeticPos, geodetic_to_ecef
from ..rf import AntennaParams, LinkBudgetParams

# Latitude/longitude ranges of the reference service area.
DEFAULT_LAT_RANGE = (30.0, 40.0)
DEFAULT_LON_RANGE = (-120.0, -110.0)
DEFAULT_ALPHA_MAX_DEG = 3.2
# Not given for the reference scenario; a typical LEO altitude.
DEFAULT_ALTITUDE_KM = 600.0


@dataclass(frozen=True)
class SatelliteConfig:
    lat: float = 0.0
    lon: float = -88.7
    alt_km: float = DEFAULT_ALTITUDE_KM

    def __post_init__(self):
        GeodeticPos(self.lat, self.lon, self.alt_km)
        if not self.alt_km > 0:
            raise InvalidInput("satellite altitude must be positive")

    @property
    def position(self) -> GeodeticPos:
        return GeodeticPos(self.lat, self.lon, self.alt_km)

    @property
    def ecef(self) -> np.ndarray:
        return geodetic_to_ecef(self.lat, self.lon, self.alt_km)


@dataclass(frozen=True)
class BBox:
    lat: tuple[float, float] = DEFAULT_LAT_RANGE
    lon: tuple[float, float] = DEFAULT_LON_RANGE

    def __post_init__(self):
        (la0, la1), (lo0, lo1) = self.lat, self.lon
        if not (-90 <= la0 <= la1 <= 90 and -180 <= lo0 <= lo1 <= 180):
            raise BadBox(f"invalid box lat={self.lat} lon={self.lon}")

    def contains(self, p: GeodeticPos) -> bool:
        return self.lat[0] <= p.lat <= self.lat[1] and self.lon[0] <= p.lon <= self.lon[1]


@dataclass(frozen=True)
class Scenario:
    users: tuple[GeodeticPos, ...]
    satellite: SatelliteConfig = field(default_factory=SatelliteConfig)
    link_budget: LinkBudgetParams = field(default_factory=LinkBudgetParams)
    alpha_max: float = math.radians(DEFAULT_ALPHA_MAX_DEG)
    seed: int = 0
    label: str = ""
    bbox: BBox = field(default_factory=BBox)

    def __post_init__(self):
        if len(self.users) < 1:
            raise InvalidInput("scenario needs at least one user")
        if not 0 < self.alpha_max < math.pi:
            raise InvalidInput("alpha_max must lie in (0, pi)")
        outside = [i for i, u in enumerate(self.users) if not self.bbox.contains(u)]
        if outside:
            raise InvalidInput(f"users outside the bounding box: {outside[:5]}")

    @property
    def n_users(self) -> int:
        return len(self.users)

    @cached_property
    def user_points(self) -> np.ndarray:
        lat = np.array([u.lat for u in self.users])
        lon = np.array([u.lon for u in self.users])
        alt = np.array([u.alt for u in self.users])
        pts = geodetic_to_ecef(lat, lon, alt)
        pts.setflags(write=False)
        return pts

    @property
    def sat_point(self) -> np.ndarray:
        return self.satellite.ecef


def generate_scenario(
    n_users: int,
    seed: int = 0,
    bbox: BBox = BBox(),
    satellite: SatelliteConfig = SatelliteConfig(),
    link_budget: LinkBudgetParams | None = None,
    alpha_max_deg: float = DEFAULT_ALPHA_MAX_DEG,
    label: str | None = None,
) -> Scenario:
    """``n_users`` positions drawn i.i.d. uniformly in (lat, lon) over ``bbox``."""
    if n_users < 1:
        raise InvalidInput("n_users must be >= 1")
    if seed < 0:
        raise InvalidInput("seed must be non-negative")
    rng = np.random.default_rng(seed)
    lat = rng.uniform(bbox.lat[0], bbox.lat[1], n_users)
    lon = rng.uniform(bbox.lon[0], bbox.lon[1], n_users)
    if link_budget is None:
        link_budget = LinkBudgetParams(AntennaParams(hpbw=math.radians(alpha_max_deg)))
    return Scenario(
        users=tuple(GeodeticPos(float(a), float(o)) for a, o in zip(lat, lon)),
        satellite=satellite,
        link_budget=link_budget,
        alpha_max=math.radians(alpha_max_deg),
        seed=seed,
        label=f"K{n_users}-s{seed}" if label is None else label,
        bbox=bbox,
    )
