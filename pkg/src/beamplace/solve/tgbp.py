"""Two-phase greedy beam placement.

Phase 1 grows cliques greedily over users sorted by descending degree in
the complement graph (a greedy colouring of the complement). Phase 2
moves users from larger to smaller beams while the size gap exceeds one.
"""

from __future__ import annotations

import numpy as np

from ..compat import CompatibilityGraph
from ..errors import InvalidInput
from .solution import BeamSolution, balancing_indicator


def complement_degree_order(graph: CompatibilityGraph) -> np.ndarray:
    """Users by descending complement degree, ties by ascending id."""
    comp_deg = (graph.n - 1) - graph.degrees
    return np.lexsort((np.arange(graph.n), -comp_deg))


def greedy_clique_cover(graph: CompatibilityGraph) -> BeamSolution:
    order = complement_degree_order(graph)
    adj = graph.adj[np.ix_(order, order)]
    n = graph.n
    covered = np.zeros(n, dtype=bool)
    clusters = []
    for p in range(n):
        if covered[p]:
            continue
        covered[p] = True
        members = [p]
        # users after p, uncovered, adjacent to every member so far
        mask = adj[p] & ~covered
        mask[: p + 1] = False
        while True:
            q = int(np.argmax(mask))
            if not mask[q]:
                break
            members.append(q)
            covered[q] = True
            mask &= adj[q]
            mask[q] = False
        clusters.append(tuple(sorted(int(order[m]) for m in members)))
    return BeamSolution(tuple(clusters), algorithm="tgbp")


def balance_refine(sol: BeamSolution, graph: CompatibilityGraph, trace=None) -> BeamSolution:
    """Move users from bigger to smaller beams while keeping every beam a clique.

    A user ``k`` of beam ``b`` moves to beam ``b2`` only when
    ``|b| - |b2| > 1`` and ``k`` is adjacent to every member of ``b2``.
    Passes repeat until one makes no move. Each pass visits ordered pairs
    of beams by descending size (ties by index), donor users by ascending
    id. If ``trace`` is a list, the balancing indicator is appended before
    the first move and after every move.
    """
    k_users = graph.n
    sol.validate(k_users)
    adj = graph.adj
    n_b = sol.n_beams
    member = np.zeros((n_b, k_users), dtype=bool)
    for b, c in enumerate(sol.clusters):
        member[b, list(c)] = True
    adj_i = adj.astype(np.int32)
    # counts[b, k]: members of beam b adjacent to user k
    counts = member.astype(np.int32) @ adj_i
    sizes = member.sum(axis=1)
    for b in range(n_b):
        if np.any(counts[b, member[b]] != sizes[b]):
            raise InvalidInput(f"beam {b} is not a clique")

    if trace is not None:
        trace.append(balancing_indicator(sizes))
    moves = 0
    while True:
        pass_moves = 0
        order = sorted(range(n_b), key=lambda b: (-sizes[b], b))
        for b in order:
            for b2 in order:
                if b == b2 or sizes[b] - sizes[b2] <= 1:
                    continue
                cand = np.flatnonzero(member[b] & (counts[b2] == sizes[b2]))
                while cand.size and sizes[b] - sizes[b2] > 1:
                    k = cand[0]
                    member[b, k] = False
                    member[b2, k] = True
                    counts[b] -= adj_i[k]
                    counts[b2] += adj_i[k]
                    sizes[b] -= 1
                    sizes[b2] += 1
                    moves += 1
                    pass_moves += 1
                    if trace is not None:
                        trace.append(balancing_indicator(sizes))
                    rest = cand[1:]
                    cand = rest[adj[k, rest]]
        if pass_moves == 0:
            break
    clusters = tuple(tuple(int(i) for i in np.flatnonzero(member[b])) for b in range(n_b))
    return BeamSolution(
        clusters,
        algorithm=sol.algorithm,
        seed=sol.seed,
        iterations_used=sol.iterations_used,
        moves_used=sol.moves_used + moves,
    )


def tgbp(graph: CompatibilityGraph, refine: bool = True, trace=None) -> BeamSolution:
    """Greedy clique cover followed by load-balancing refinement."""
    sol = greedy_clique_cover(graph)
    return balance_refine(sol, graph, trace) if refine else sol
