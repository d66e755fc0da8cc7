from .io import export_cdf, read_report, read_scenario, read_solution, write_scenario, write_solution
from .runner import BenchReport, MatrixSpec, run_cell, run_matrix, solve_scenario
from .scenario import BBox, SatelliteConfig, Scenario, generate_scenario

__all__ = [
    "BBox",
    "BenchReport",
    "MatrixSpec",
    "SatelliteConfig",
    "Scenario",
    "export_cdf",
    "generate_scenario",
    "read_report",
    "read_scenario",
    "read_solution",
    "run_cell",
    "run_matrix",
    "solve_scenario",
    "write_scenario",
    "write_solution",
]
