"""Antenna pattern and link budget.

All internal arithmetic is linear; :func:`db` / :func:`from_db` convert at
reporting boundaries.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .errors import NoBracket, OutOfDomain

SPEED_OF_LIGHT = 299_792_458.0
BOLTZMANN = 1.380649e-23

# First positive zero of J1.
J1_FIRST_ZERO = 3.8317059702075125

_SERIES_LIMIT = 12.0
_SERIES_TERMS = 40
_ASYMPTOTIC_TERMS = 24


def db(x):
    return 10.0 * np.log10(x)


def from_db(x_db):
    return 10.0 ** (np.asarray(x_db, dtype=float) / 10.0)


def _j1_over_x_series(x):
    # J1(x)/x = sum_m (-x^2/4)^m / (2 m! (m+1)!), Horner in t = -x^2/4
    t = -0.25 * x * x
    acc = np.zeros_like(x)
    for m in range(_SERIES_TERMS, -1, -1):
        acc = acc * t + 1.0 / (2.0 * math.factorial(m) * math.factorial(m + 1))
    return acc


def _j1_asymptotic(x):
    # Hankel expansion, x > 0 and large: sqrt(2/(pi x)) (P cos chi - Q sin chi)
    mu = 4.0
    p = np.ones_like(x)
    q = np.zeros_like(x)
    term = np.ones_like(x)
    inv8x = 1.0 / (8.0 * x)
    prev = np.full_like(x, np.inf)
    for k in range(1, _ASYMPTOTIC_TERMS + 1):
        term = term * (mu - (2 * k - 1) ** 2) * inv8x / k
        # stop adding once the (divergent) series starts growing
        mag = np.abs(term)
        use = mag < prev
        prev = np.where(use, mag, 0.0)
        term = np.where(use, term, 0.0)
        sign = -1.0 if (k // 2) % 2 else 1.0
        if k % 2:
            q = q + sign * term
        else:
            p = p + sign * term
    chi = x - 0.75 * math.pi
    return np.sqrt(2.0 / (math.pi * x)) * (p * np.cos(chi) - q * np.sin(chi))


def bessel_j1(x):
    """Bessel function of the first kind, order one.

    Power series for ``|x| <= 12`` and the Hankel asymptotic expansion
    beyond; absolute error below 1e-8 everywhere.
    """
    x = np.asarray(x, dtype=float)
    ax = np.abs(x)
    small = ax <= _SERIES_LIMIT
    out = np.empty_like(ax)
    out[small] = ax[small] * _j1_over_x_series(ax[small])
    big = ~small
    if np.any(big):
        out[big] = _j1_asymptotic(ax[big])
    out = np.sign(x) * out
    return out[()] if out.ndim == 0 else out


def j1_over_x(x):
    """``J1(x)/x`` with the removable singularity filled in (value 1/2 at 0)."""
    x = np.abs(np.asarray(x, dtype=float))
    small = x <= _SERIES_LIMIT
    out = np.empty_like(x)
    out[small] = _j1_over_x_series(x[small])
    big = ~small
    if np.any(big):
        out[big] = _j1_asymptotic(x[big]) / x[big]
    return out[()] if out.ndim == 0 else out


def _default_wavelength():
    return SPEED_OF_LIGHT / 18.05e9


@dataclass(frozen=True)
class AntennaParams:
    """Satellite reflector antenna.

    Defaults follow the reference scenario: 18.05 GHz carrier, 0.6 m dish,
    50 dBi peak gain, aperture radius of five wavelengths and a configured
    half-power beamwidth of 3.2 degrees. The efficiency of 0.6 is an
    assumed value.
    """

    wavelength: float = field(default_factory=_default_wavelength)
    aperture_radius: float | None = None
    dish_diameter: float = 0.6
    g_max: float = 1e5
    efficiency: float = 0.6
    hpbw: float = math.radians(3.2)

    def __post_init__(self):
        if self.aperture_radius is None:
            object.__setattr__(self, "aperture_radius", 5.0 * self.wavelength)
        for name in ("wavelength", "aperture_radius", "dish_diameter", "g_max", "efficiency", "hpbw"):
            if not getattr(self, name) > 0:
                raise OutOfDomain(f"{name} must be positive")
        if self.efficiency > 1.0:
            raise OutOfDomain("efficiency must be <= 1")
        if self.hpbw >= math.pi:
            raise OutOfDomain("hpbw must be below pi")

    @classmethod
    def from_frequency(cls, frequency_hz: float, **kwargs) -> AntennaParams:
        return cls(wavelength=SPEED_OF_LIGHT / frequency_hz, **kwargs)

    @property
    def wavenumber_radius(self) -> float:
        """``2 pi r / lambda``, the scale of the pattern argument."""
        return 2.0 * math.pi * self.aperture_radius / self.wavelength

    @property
    def received_gain(self) -> float:
        return self.efficiency * math.pi**2 * self.dish_diameter**2 / self.wavelength**2


def thermal_noise(temperature_k: float = 290.0, bandwidth_hz: float = 400e6) -> float:
    return BOLTZMANN * temperature_k * bandwidth_hz


@dataclass(frozen=True)
class LinkBudgetParams:
    antenna: AntennaParams = field(default_factory=AntennaParams)
    atmospheric_loss: float = 1.0
    noise_power: float = field(default_factory=thermal_noise)

    def __post_init__(self):
        if not self.atmospheric_loss >= 1.0:
            raise OutOfDomain("atmospheric loss must be >= 1 (linear)")
        if not self.noise_power > 0.0:
            raise OutOfDomain("noise power must be positive")


def pattern_gain(alpha, ant: AntennaParams):
    """Normalised pattern gain ``4 |J1(u)/u|^2``, ``u = (2 pi r / lambda) sin(alpha)``.

    Equals 1 on boresight. ``alpha`` in radians, within ``[0, pi/2]``.
    """
    alpha = np.asarray(alpha, dtype=float)
    if np.any(alpha < 0.0) or np.any(alpha > 0.5 * math.pi):
        raise OutOfDomain("pattern angle must lie in [0, pi/2]")
    u = ant.wavenumber_radius * np.sin(alpha)
    g = 4.0 * j1_over_x(u) ** 2
    return g[()] if np.ndim(g) == 0 else g


def solve_half_power(ant: AntennaParams, tol: float = 1e-12) -> float:
    """Smallest positive angle where the pattern gain equals one half.

    Bisection between boresight and the first pattern null (or pi/2 if the
    aperture is too small to have a null). The half-power beamwidth is
    twice the returned angle.
    """
    if not tol > 0:
        raise OutOfDomain("tol must be positive")
    s_null = J1_FIRST_ZERO / ant.wavenumber_radius
    hi = math.asin(s_null) if s_null < 1.0 else 0.5 * math.pi
    lo = 0.0
    if not float(pattern_gain(hi, ant)) < 0.5:
        raise NoBracket("pattern gain never drops to one half")
    mid = 0.5 * (lo + hi)
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        g = float(pattern_gain(mid, ant))
        if abs(g - 0.5) < tol:
            break
        if g > 0.5:
            lo = mid
        else:
            hi = mid
    if abs(float(pattern_gain(mid, ant)) - 0.5) >= tol:
        raise NoBracket(f"bisection stalled at |G - 0.5| >= {tol}")
    return mid


def free_path_loss(slant_km, wavelength_m):
    """Free-space path loss ``(4 pi S / lambda)^2`` (linear), S given in km."""
    s = np.asarray(slant_km, dtype=float)
    if np.any(s <= 0.0):
        raise OutOfDomain("slant range must be positive")
    if not wavelength_m > 0:
        raise OutOfDomain("wavelength must be positive")
    out = (4.0 * math.pi * s * 1e3 / wavelength_m) ** 2
    return out[()] if out.ndim == 0 else out


def scgnr(alpha, slant_km, lb: LinkBudgetParams):
    """Statistical channel gain-to-noise ratio (linear)."""
    ant = lb.antenna
    gain = ant.g_max * pattern_gain(alpha, ant) * ant.received_gain
    loss = free_path_loss(slant_km, ant.wavelength) * lb.atmospheric_loss
    return gain / (loss * lb.noise_power)
