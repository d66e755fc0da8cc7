import math

import mpmath
import numpy as np
import pytest
import scipy.special

from beamplace import rf
from beamplace.errors import OutOfDomain
from beamplace.rf import AntennaParams, LinkBudgetParams

mpmath.mp.dps = 60


def j1_series(x, terms=None):
    """Power series of J1 in 60-digit arithmetic; ``terms=None`` sums to convergence."""
    x = mpmath.mpf(x)
    half = x / 2
    total = mpmath.mpf(0)
    m = 0
    while True:
        term = (-1) ** m * half ** (2 * m + 1) / (mpmath.factorial(m) * mpmath.factorial(m + 1))
        total += term
        m += 1
        if terms is not None and m >= terms:
            break
        if terms is None and abs(term) < mpmath.mpf(10) ** -40 and m > 5:
            break
    return float(total)


def test_j1_zero_and_odd():
    assert rf.bessel_j1(0.0) == 0.0
    x = np.linspace(0.1, 25, 50)
    np.testing.assert_array_equal(rf.bessel_j1(-x), -rf.bessel_j1(x))


def test_j1_at_one():
    assert rf.bessel_j1(1.0) == pytest.approx(j1_series(1.0, 30), abs=1e-15)
    assert rf.bessel_j1(1.0) == pytest.approx(0.4400505857, abs=1e-10)


def test_j1_against_series_grid():
    x = np.linspace(0, 20, 2000)
    want = np.array([j1_series(v) for v in x])
    assert np.max(np.abs(rf.bessel_j1(x) - want)) < 1e-8


def test_j1_against_scipy_wide():
    x = np.linspace(-60, 60, 12001)
    assert np.max(np.abs(rf.bessel_j1(x) - scipy.special.j1(x))) < 1e-8


def test_pattern_gain_boresight_and_limit():
    ant = AntennaParams()
    assert rf.pattern_gain(0.0, ant) == 1.0
    assert rf.pattern_gain(1e-12, ant) == pytest.approx(1.0, abs=1e-9)


def test_pattern_gain_domain():
    ant = AntennaParams()
    with pytest.raises(OutOfDomain):
        rf.pattern_gain(-1e-3, ant)
    with pytest.raises(OutOfDomain):
        rf.pattern_gain(math.pi / 2 + 1e-6, ant)


def test_pattern_gain_bounded():
    ant = AntennaParams()
    alpha = np.linspace(0, math.pi / 2, 10_000)
    g = rf.pattern_gain(alpha, ant)
    assert g[0] == 1.0
    assert np.all(g[1:] < 1.0) and np.all(g >= 0.0)


def test_half_power_five_wavelength_aperture():
    ant = AntennaParams()
    a = rf.solve_half_power(ant, 1e-10)
    assert abs(rf.pattern_gain(a, ant) - 0.5) < 1e-10
    # bisection on the mpmath series pattern: u* = 1.61633994831..., sin a = u*/(10 pi)
    assert math.degrees(a) == pytest.approx(2.9491526613, abs=1e-7)
    assert 2 * math.degrees(a) == pytest.approx(5.898, abs=1e-3)
    d = 1e-6
    assert rf.pattern_gain(a - d, ant) > 0.5 > rf.pattern_gain(a + d, ant)


def test_half_power_scales_with_aperture():
    lam = AntennaParams().wavelength
    a1 = rf.solve_half_power(AntennaParams(aperture_radius=5 * lam))
    a2 = rf.solve_half_power(AntennaParams(aperture_radius=10 * lam))
    assert math.sin(a2) == pytest.approx(math.sin(a1) / 2, rel=1e-9)


def test_half_power_tolerance_refinement():
    ant = AntennaParams()
    assert rf.solve_half_power(ant, 1e-6) == pytest.approx(rf.solve_half_power(ant, 1e-10), abs=1e-6)


def test_free_path_loss():
    lam = 0.02
    assert rf.free_path_loss(lam / (4 * math.pi) / 1e3, lam) == pytest.approx(1.0)
    ratio = rf.db(rf.free_path_loss(2.0, lam)) - rf.db(rf.free_path_loss(1.0, lam))
    assert ratio == pytest.approx(20 * math.log10(2))
    # 20 log10(4 pi S / lambda) with lambda = c / 18.05 GHz
    assert rf.db(rf.free_path_loss(600.0, AntennaParams().wavelength)) == pytest.approx(173.1403523543898, abs=1e-9)
    with pytest.raises(OutOfDomain):
        rf.free_path_loss(0.0, lam)


def test_scgnr_unity_chain():
    lam = 1.0
    # efficiency * pi^2 D^2 / lam^2 = 1 and (4 pi S / lam)^2 = 1
    ant = AntennaParams(wavelength=lam, aperture_radius=5.0, dish_diameter=1 / math.pi, g_max=1.0, efficiency=1.0)
    lb = LinkBudgetParams(ant, 1.0, 1.0)
    s_km = lam / (4 * math.pi) / 1e3
    assert rf.scgnr(0.0, s_km, lb) == pytest.approx(1.0, rel=1e-12)


def test_scgnr_half_power_ratio():
    lb = LinkBudgetParams()
    a = rf.solve_half_power(lb.antenna, 1e-12)
    ratio = rf.scgnr(0.0, 1000.0, lb) / rf.scgnr(a, 1000.0, lb)
    assert ratio == pytest.approx(2.0, rel=1e-10)


def test_scgnr_reference_anchor():
    # hand dB chain: 50 dBi + 38.88066503 (0.6 pi^2 0.6^2 / lam^2) - 173.14035235 (FSPL, 600 km)
    # - 0 dB atmosphere + 117.95458728 (k_B 290 K 400 MHz) = 33.69489996 dB
    lb = LinkBudgetParams()
    assert rf.db(rf.scgnr(0.0, 600.0, lb)) == pytest.approx(33.694899958225676, abs=1e-9)


def test_scgnr_db_decomposition():
    lb = LinkBudgetParams(atmospheric_loss=rf.from_db(1.3))
    ant = lb.antenna
    alpha, s = 0.01, 2500.0
    parts = (
        rf.db(ant.g_max)
        + rf.db(rf.pattern_gain(alpha, ant))
        + rf.db(ant.received_gain)
        - rf.db(rf.free_path_loss(s, ant.wavelength))
        - rf.db(lb.atmospheric_loss)
        - rf.db(lb.noise_power)
    )
    assert rf.db(rf.scgnr(alpha, s, lb)) == pytest.approx(parts, abs=1e-9)


def test_scgnr_monotone():
    lb = LinkBudgetParams()
    a_null = math.asin(rf.J1_FIRST_ZERO / lb.antenna.wavenumber_radius)
    alpha = np.linspace(0, a_null, 500)
    assert np.all(np.diff(rf.scgnr(alpha, 1000.0, lb)) <= 0)
    s = np.linspace(500, 5000, 100)
    assert np.all(np.diff(rf.scgnr(0.01, s, lb)) < 0)


def test_parameter_validation():
    with pytest.raises(OutOfDomain):
        AntennaParams(efficiency=1.2)
    with pytest.raises(OutOfDomain):
        LinkBudgetParams(atmospheric_loss=0.5)
    with pytest.raises(OutOfDomain):
        LinkBudgetParams(noise_power=0.0)
