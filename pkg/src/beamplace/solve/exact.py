"""Exact minimum clique cover for small graphs (test oracle)."""

from __future__ import annotations

import numpy as np

from ..compat import CompatibilityGraph
from ..errors import TooLarge
from .solution import BeamSolution

MAX_EXACT_USERS = 16


def _neighbour_masks(graph):
    n = graph.n
    weights = 1 << np.arange(n, dtype=np.int64)
    adj = graph.adj.copy()
    np.fill_diagonal(adj, False)
    return (adj * weights).sum(axis=1)


def clique_table(graph: CompatibilityGraph) -> np.ndarray:
    """Boolean table over all ``2**n`` vertex subsets: is the subset a clique."""
    n = graph.n
    nbr = _neighbour_masks(graph)
    table = np.zeros(1 << n, dtype=bool)
    table[0] = True
    for v in range(n):
        lo = np.arange(1 << v, dtype=np.int64)
        # adding v to clique `lo` needs v adjacent to all of lo
        table[(1 << v) + lo] = table[lo] & ((lo & ~nbr[v]) == 0)
    return table


def exact_mcc(graph: CompatibilityGraph) -> int:
    """Minimum number of cliques partitioning the vertices.

    Inclusion-exclusion over vertex subsets: ``k`` cliques can cover V iff
    ``sum_S (-1)^(n-|S|) c(S)^k > 0`` where ``c(S)`` counts the cliques
    (empty one included) inside ``S``.
    """
    n = graph.n
    if n > MAX_EXACT_USERS:
        raise TooLarge(f"exact solver limited to {MAX_EXACT_USERS} users, got {n}")
    c = clique_table(graph).astype(np.int64)
    # subset-sum (zeta) transform
    for v in range(n):
        c = c.reshape(-1, 2, 1 << v)
        c[:, 1, :] += c[:, 0, :]
        c = c.reshape(-1)
    popcount = np.array([bin(m).count("1") for m in range(1 << n)])
    sign = np.where((n - popcount) % 2 == 0, 1, -1).astype(object)
    base = c.astype(object)
    power = np.ones(1 << n, dtype=object)
    for k in range(1, n + 1):
        power = power * base
        if (sign * power).sum() > 0:
            return k
    return n


def exact_cover(graph: CompatibilityGraph) -> BeamSolution:
    """An optimal clique partition, found by backtracking at the exact size."""
    target = exact_mcc(graph)
    n = graph.n
    nbr = [int(m) for m in _neighbour_masks(graph)]
    order = sorted(range(n), key=lambda v: (bin(nbr[v]).count("1"), v))
    groups: list[int] = []

    def place(i):
        if i == n:
            return True
        v = order[i]
        for g in range(len(groups)):
            if groups[g] & ~nbr[v] == 0:
                groups[g] |= 1 << v
                if place(i + 1):
                    return True
                groups[g] &= ~(1 << v)
        if len(groups) < target:
            groups.append(1 << v)
            if place(i + 1):
                return True
            groups.pop()
        return False

    place(0)
    clusters = sorted(tuple(v for v in range(n) if m >> v & 1) for m in groups)
    return BeamSolution(tuple(clusters), algorithm="exact")
