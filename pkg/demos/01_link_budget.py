"""
Antenna pattern and link budget
===============================

The normalised pattern ``4 |J1(u)/u|^2`` of a circular aperture, where the
half-power point falls for a five-wavelength aperture, and how SCGNR
degrades away from boresight.
"""

import math

import numpy as np

from beamplace import rf

ant = rf.AntennaParams()
print(f"wavelength {ant.wavelength * 1e3:.3f} mm, aperture radius {ant.aperture_radius * 1e3:.1f} mm")

# Where does the gain fall to one half?
half = rf.solve_half_power(ant)
print(f"half-power angle {math.degrees(half):.4f} deg -> pattern beamwidth {2 * math.degrees(half):.3f} deg")
print(f"configured beamwidth used for feasibility: {math.degrees(ant.hpbw):.1f} deg")

# The configured 3.2 deg beam is narrower than the pattern's own beamwidth,
# so users inside it always keep at least half the peak gain.
print(f"gain at 1.6 deg off boresight: {rf.pattern_gain(math.radians(1.6), ant):.3f}")

for deg in np.linspace(0, 6, 7):
    g = rf.pattern_gain(math.radians(deg), ant)
    print(f"  {deg:4.1f} deg  G = {g:.4f}  ({rf.db(g):7.2f} dB)")

# %%
# SCGNR for a user straight under a 600 km satellite, then at the
# half-power edge of the beam: exactly 3.01 dB apart.
lb = rf.LinkBudgetParams()
peak = rf.db(rf.scgnr(0.0, 600.0, lb))
edge = rf.db(rf.scgnr(half, 600.0, lb))
print(f"SCGNR on boresight {peak:.3f} dB, at the half-power edge {edge:.3f} dB, step {peak - edge:.4f} dB")
