"""User compatibility graph.

Two users are adjacent when the angle between them, seen from the
satellite, is at most half the beamwidth, so that any clique of the graph
fits inside a single beam.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import IndexOutOfRange, InvalidInput
from .geo import pairwise_apex_angles


@dataclass(frozen=True, eq=False)
class CompatibilityGraph:
    """Dense symmetric boolean adjacency over ``n`` users.

    The diagonal is stored as ``True`` (a user can share a beam with
    itself) but is never counted as an edge: ``degrees`` holds off-diagonal
    counts and :func:`complement` flips only off-diagonal entries.
    """

    adj: np.ndarray
    threshold: float = float("nan")

    def __post_init__(self):
        adj = np.array(self.adj, dtype=bool)
        if adj.ndim != 2 or adj.shape[0] != adj.shape[1] or adj.shape[0] < 1:
            raise InvalidInput("adjacency must be a non-empty square matrix")
        if not np.array_equal(adj, adj.T):
            raise InvalidInput("adjacency must be symmetric")
        np.fill_diagonal(adj, True)
        adj.setflags(write=False)
        object.__setattr__(self, "adj", adj)
        degrees = adj.sum(axis=1) - 1
        degrees.setflags(write=False)
        object.__setattr__(self, "degrees", degrees)

    @property
    def n(self) -> int:
        return self.adj.shape[0]

    @property
    def n_edges(self) -> int:
        return int(self.degrees.sum()) // 2

    @classmethod
    def from_edges(cls, n: int, edges, threshold: float = float("nan")) -> CompatibilityGraph:
        adj = np.zeros((n, n), dtype=bool)
        for i, j in edges:
            adj[i, j] = adj[j, i] = True
        return cls(adj, threshold)

    def __eq__(self, other):
        if not isinstance(other, CompatibilityGraph):
            return NotImplemented
        return np.array_equal(self.adj, other.adj)


def build_graph(users, sat, alpha_max: float) -> CompatibilityGraph:
    """Compatibility graph of ``users`` (``(K, 3)`` km) seen from ``sat``.

    Edge iff the apex angle at the satellite is ``<= alpha_max / 2``.
    """
    users = np.atleast_2d(np.asarray(users, dtype=float))
    if users.shape[0] < 1:
        raise InvalidInput("need at least one user")
    half = 0.5 * alpha_max
    angles = pairwise_apex_angles(users, sat)
    adj = angles <= half
    return CompatibilityGraph(adj, half)


def complement(g: CompatibilityGraph) -> CompatibilityGraph:
    return CompatibilityGraph(~g.adj, g.threshold)


def is_clique(g: CompatibilityGraph, subset) -> bool:
    idx = np.fromiter(subset, dtype=np.int64)
    if idx.size and (idx.min() < 0 or idx.max() >= g.n):
        raise IndexOutOfRange(f"user id outside [0, {g.n})")
    if idx.size <= 1:
        return True
    return bool(g.adj[np.ix_(idx, idx)].all())


def labels_are_cliques(g: CompatibilityGraph, labels) -> bool:
    """True iff every group of equal labels is a clique of ``g``."""
    labels = np.asarray(labels)
    if labels.size <= 256:
        return not np.any((labels[:, None] == labels[None, :]) & ~g.adj)
    order = np.argsort(labels, kind="stable")
    bounds = np.flatnonzero(np.diff(labels[order])) + 1
    for members in np.split(order, bounds):
        if members.size > 1 and not g.adj[np.ix_(members, members)].all():
            return False
    return True


def min_degree(g: CompatibilityGraph) -> int:
    return int(g.degrees.min())


def max_degree(g: CompatibilityGraph) -> int:
    return int(g.degrees.max())
