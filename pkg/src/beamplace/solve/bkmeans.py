"""Bisection over the beam count with repeated K-means feasibility probes."""

from __future__ import annotations

import logging
from dataclasses import dataclass

import numpy as np

from ..compat import CompatibilityGraph, labels_are_cliques
from ..errors import BadClusterCount, Infeasible, InvalidInput
from .kmeans import kmeans_run, squared_distances
from .solution import BeamSolution

log = logging.getLogger(__name__)

# above this many users the pairwise distance cache costs more memory than it saves
_SQDIST_LIMIT = 4000


@dataclass(frozen=True)
class SolverConfig:
    """``max_beams=None`` means one beam per user is available."""

    max_beams: int | None = None
    max_restarts: int = 200
    kmeans_max_iters: int = 500
    rng_seed: int = 0

    def __post_init__(self):
        if self.max_beams is not None and self.max_beams < 1:
            raise BadClusterCount("max_beams must be >= 1")
        if self.max_restarts < 1 or self.kmeans_max_iters < 1:
            raise InvalidInput("max_restarts and kmeans_max_iters must be >= 1")
        if self.rng_seed < 0:
            raise InvalidInput("rng_seed must be non-negative")


@dataclass
class ProbeRecord:
    n_beams: int
    feasible: bool
    restarts: int
    labels: np.ndarray | None = None


def probe(points, graph, n_beams, cfg: SolverConfig, sqdist=None):
    """Up to ``cfg.max_restarts`` K-means runs with ``n_beams`` clusters.

    Restart ``r`` draws from a generator seeded by ``(seed, n_beams, r)``,
    so the verdict does not depend on evaluation order. Returns
    ``(labels or None, restarts, lloyd_rounds)``.
    """
    rounds = 0
    for r in range(cfg.max_restarts):
        rng = np.random.default_rng([cfg.rng_seed, n_beams, r])
        labels, used = kmeans_run(points, n_beams, cfg.kmeans_max_iters, rng, sqdist)
        rounds += used
        if labels_are_cliques(graph, labels):
            return labels, r + 1, rounds
    return None, cfg.max_restarts, rounds


def bk_means(points, graph: CompatibilityGraph, cfg: SolverConfig = SolverConfig(), history=None) -> BeamSolution:
    """Smallest beam count for which K-means finds an all-clique clustering.

    ``points`` are the users' Cartesian positions in the same order as the
    graph vertices. When ``history`` is a list, one :class:`ProbeRecord`
    per tested beam count is appended to it, each feasible one carrying
    its witness labels.
    """
    x = np.asarray(points, dtype=float)
    k = graph.n
    if x.shape[0] != k:
        raise InvalidInput("points and graph disagree on the user count")
    n_max = k if cfg.max_beams is None else min(cfg.max_beams, k)
    meta = dict(algorithm="bkmeans", seed=cfg.rng_seed)

    def record(b, labels, restarts):
        if history is not None:
            history.append(ProbeRecord(b, labels is not None, restarts, labels))

    if graph.adj.all():
        labels = np.zeros(k, dtype=np.int64)
        record(1, labels, 0)
        return BeamSolution.from_labels(labels, **meta)

    # centred, since kmeans_run seeds on centred coordinates
    centred = x - x.mean(axis=0)
    sqdist = squared_distances(centred) if k <= _SQDIST_LIMIT else None
    rounds = 0
    b_min = 1
    if n_max == k:
        best = np.arange(k)
        record(k, best, 0)
    else:
        best, restarts, rounds = probe(x, graph, n_max, cfg, sqdist)
        record(n_max, best, restarts)
        if best is None:
            raise Infeasible(f"no clique clustering with {n_max} beams after {cfg.max_restarts} restarts")
    b_max = n_max

    while b_min + 1 < b_max:
        b_mean = (b_min + b_max) // 2
        labels, restarts, used = probe(x, graph, b_mean, cfg, sqdist)
        rounds += used
        record(b_mean, labels, restarts)
        log.debug("probe B=%d feasible=%s restarts=%d", b_mean, labels is not None, restarts)
        if labels is not None:
            b_max, best = b_mean, labels
        else:
            b_min = b_mean
    return BeamSolution.from_labels(best, iterations_used=rounds, **meta)
