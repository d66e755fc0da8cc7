import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from beamplace.errors import DegenerateApex, OutOfDomain, ZeroRange
from beamplace.geo import (
    EARTH_RADIUS_KM as R,
    GeodeticPos,
    apex_angle,
    chord_distance,
    ecef_to_geodetic,
    geodetic_to_ecef,
    slant_range,
    to_ecef,
)


@pytest.mark.parametrize(
    "lat, lon, expected",
    [(0, 0, (R, 0, 0)), (90, 0, (0, 0, R)), (0, 90, (0, R, 0))],
)
def test_to_ecef_axes(lat, lon, expected):
    np.testing.assert_allclose(to_ecef(GeodeticPos(lat, lon)), expected, atol=1e-9)


def test_geodetic_pos_rejects_out_of_range():
    with pytest.raises(OutOfDomain):
        GeodeticPos(91, 0)
    with pytest.raises(OutOfDomain):
        GeodeticPos(0, 181)
    with pytest.raises(OutOfDomain):
        GeodeticPos(0, 0, -1)


def test_roundtrip_random_positions():
    rng = np.random.default_rng(0)
    lat = rng.uniform(-89, 89, 1000)
    lon = rng.uniform(-180, 180, 1000)
    xyz = geodetic_to_ecef(lat, lon)
    np.testing.assert_allclose(np.linalg.norm(xyz, axis=1), R, rtol=1e-9)
    lat2, lon2, alt2 = ecef_to_geodetic(xyz)
    np.testing.assert_allclose(lat2, lat, atol=1e-9)
    # +-180 wrap
    dlon = (lon2 - lon + 180) % 360 - 180
    np.testing.assert_allclose(dlon, 0, atol=1e-9)
    np.testing.assert_allclose(alt2, 0, atol=1e-6)


def test_norm_includes_altitude():
    p = to_ecef(GeodeticPos(12.0, -40.0, 600.0))
    assert np.linalg.norm(p) == pytest.approx(R + 600.0, rel=1e-12)


def test_chord_examples():
    a = np.array([R, 0, 0])
    assert chord_distance(a, a) == 0
    assert chord_distance(a, -a) == pytest.approx(2 * R)
    assert chord_distance(a, [0, R, 0]) == pytest.approx(R * math.sqrt(2))


@given(st.lists(st.floats(-1e4, 1e4), min_size=9, max_size=9))
def test_chord_triangle_inequality(c):
    a, b, d = np.array(c[:3]), np.array(c[3:6]), np.array(c[6:])
    assert chord_distance(a, b) == chord_distance(b, a)
    assert chord_distance(a, d) <= chord_distance(a, b) + chord_distance(b, d) + 1e-9


def test_slant_range_subsatellite():
    sat = to_ecef(GeodeticPos(10, 20, 600))
    user = to_ecef(GeodeticPos(10, 20))
    assert slant_range(user, sat) == pytest.approx(600.0, rel=1e-12)


def test_slant_range_reference_geometry():
    # hand ECEF computation with math.dist, R = 6371 km
    user = to_ecef(GeodeticPos(35, -115))
    sat = to_ecef(GeodeticPos(0, -88.7, 600))
    assert slant_range(user, sat) == pytest.approx(4894.430668598364, rel=1e-12)
    assert slant_range(sat, user) == slant_range(user, sat)


def test_slant_range_zero():
    p = to_ecef(GeodeticPos(0, 0, 600))
    with pytest.raises(ZeroRange):
        slant_range(p, p)


def test_apex_angle_examples():
    o = np.zeros(3)
    a = np.array([1.0, 0, 0])
    assert apex_angle(a, a, o) == 0.0
    assert apex_angle(a, [0, 1.0, 0], o) == pytest.approx(math.pi / 2)
    with pytest.raises(DegenerateApex):
        apex_angle(o, a, o)


def _law_of_cosines(a, b, apex):
    sa = math.dist(a, apex)
    sb = math.dist(b, apex)
    d = math.dist(a, b)
    return math.acos(max(-1.0, min(1.0, (sa * sa + sb * sb - d * d) / (2 * sa * sb))))


@settings(max_examples=300)
@given(st.lists(st.floats(-100, 100), min_size=9, max_size=9))
def test_apex_angle_matches_law_of_cosines(c):
    a, b, apex = c[:3], c[3:6], c[6:]
    if min(math.dist(a, apex), math.dist(b, apex)) < 1.0:
        return
    got = float(apex_angle(a, b, apex))
    assert 0.0 <= got <= math.pi
    assert got == pytest.approx(float(apex_angle(b, a, apex)), abs=1e-12)
    # law of cosines loses precision near 0 and pi
    want = _law_of_cosines(a, b, apex)
    tol = 1e-10 if 1e-3 < want < math.pi - 1e-3 else 1e-6
    assert got == pytest.approx(want, abs=tol)
