"""Spherical-Earth geometry: geodetic to Cartesian conversion and angles.

Positions in the Earth-centred frame are plain ``numpy`` arrays with a
trailing axis of length 3, in kilometres. All functions broadcast over
leading axes.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DegenerateApex, OutOfDomain, ZeroRange

EARTH_RADIUS_KM = 6371.0


@dataclass(frozen=True)
class GeodeticPos:
    """Latitude/longitude in degrees, altitude above the sphere in km."""

    lat: float
    lon: float
    alt: float = 0.0

    def __post_init__(self):
        if not -90.0 <= self.lat <= 90.0:
            raise OutOfDomain(f"latitude {self.lat} outside [-90, 90]")
        if not -180.0 <= self.lon <= 180.0:
            raise OutOfDomain(f"longitude {self.lon} outside [-180, 180]")
        if not self.alt >= 0.0:
            raise OutOfDomain(f"altitude {self.alt} must be >= 0")


def geodetic_to_ecef(lat_deg, lon_deg, alt_km=0.0, radius=EARTH_RADIUS_KM):
    """Vectorised conversion of degrees/km to Earth-centred Cartesian km.

    Returns an array of shape ``broadcast(lat, lon, alt).shape + (3,)``.
    """
    lat = np.radians(np.asarray(lat_deg, dtype=float))
    lon = np.radians(np.asarray(lon_deg, dtype=float))
    r = radius + np.asarray(alt_km, dtype=float)
    clat = np.cos(lat)
    return np.stack(
        np.broadcast_arrays(r * clat * np.cos(lon), r * clat * np.sin(lon), r * np.sin(lat)),
        axis=-1,
    )


def to_ecef(p: GeodeticPos) -> np.ndarray:
    return geodetic_to_ecef(p.lat, p.lon, p.alt)


def ecef_to_geodetic(xyz, radius=EARTH_RADIUS_KM):
    """Inverse of :func:`geodetic_to_ecef`; returns ``(lat_deg, lon_deg, alt_km)``."""
    xyz = np.asarray(xyz, dtype=float)
    x, y, z = xyz[..., 0], xyz[..., 1], xyz[..., 2]
    lat = np.degrees(np.arctan2(z, np.hypot(x, y)))
    lon = np.degrees(np.arctan2(y, x))
    alt = np.linalg.norm(xyz, axis=-1) - radius
    return lat, lon, alt


def chord_distance(a, b):
    """Euclidean distance between Cartesian points (km)."""
    return np.linalg.norm(np.asarray(a, dtype=float) - np.asarray(b, dtype=float), axis=-1)


def slant_range(user, sat):
    """Straight-line distance from user(s) to the satellite, in km."""
    s = chord_distance(user, sat)
    if np.any(s == 0.0):
        raise ZeroRange("user coincides with the satellite")
    return s


def _angle_between_units(ua, ub):
    # 2 atan2(|a - b|, |a + b|) stays accurate near 0 and pi, unlike arccos
    return 2.0 * np.arctan2(np.linalg.norm(ua - ub, axis=-1), np.linalg.norm(ua + ub, axis=-1))


def unit_directions(points, apex):
    """Unit vectors from ``apex`` towards each row of ``points``."""
    v = np.asarray(points, dtype=float) - np.asarray(apex, dtype=float)
    n = np.linalg.norm(v, axis=-1, keepdims=True)
    if np.any(n == 0.0):
        raise DegenerateApex("point coincides with the apex")
    return v / n


def apex_angle(a, b, apex):
    """Angle in radians subtended at ``apex`` by points ``a`` and ``b``.

    The angle between the unit vectors ``a - apex`` and ``b - apex``; equal
    to the law-of-cosines angle of the apex/a/b triangle with chord sides.
    """
    return _angle_between_units(unit_directions(a, apex), unit_directions(b, apex))


def pairwise_apex_angles(points, apex):
    """Matrix of apex angles between every pair of ``points`` (radians)."""
    u = unit_directions(points, apex)
    return _angle_between_units(u[:, None, :], u[None, :, :])
