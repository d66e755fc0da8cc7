"""Beam placement for dense LEO satellite coverage.

Users are grouped into the fewest beams such that every pair in a beam is
within half the beamwidth as seen from the satellite, then balanced by
load. Two solvers are provided, :func:`~beamplace.solve.bk_means` and
:func:`~beamplace.solve.tgbp`, plus an exact solver for small instances.
"""

from .compat import CompatibilityGraph, build_graph, complement, is_clique
from .evaluation import EvaluatedSolution, beam_center, cdf_points, evaluate
from .geo import EARTH_RADIUS_KM, GeodeticPos, apex_angle, chord_distance, slant_range, to_ecef
from .rf import AntennaParams, LinkBudgetParams, pattern_gain, scgnr, solve_half_power
from .solve import BeamSolution, SolverConfig, bk_means, exact_mcc, tgbp

__version__ = "0.1.0"
