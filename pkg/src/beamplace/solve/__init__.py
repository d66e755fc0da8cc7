from .bkmeans import ProbeRecord, SolverConfig, bk_means, probe
from .exact import MAX_EXACT_USERS, exact_cover, exact_mcc
from .kmeans import kmeans, kmeans_plusplus, kmeans_run
from .solution import BeamSolution, balancing_indicator
from .tgbp import balance_refine, complement_degree_order, greedy_clique_cover, tgbp

__all__ = [
    "BeamSolution",
    "ProbeRecord",
    "SolverConfig",
    "MAX_EXACT_USERS",
    "balance_refine",
    "balancing_indicator",
    "bk_means",
    "complement_degree_order",
    "exact_cover",
    "exact_mcc",
    "greedy_clique_cover",
    "kmeans",
    "kmeans_plusplus",
    "kmeans_run",
    "probe",
    "tgbp",
]
