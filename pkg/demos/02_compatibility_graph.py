"""
Compatibility graph
===================

Users become vertices; two users share an edge when the satellite sees
them within half the beamwidth of each other. A beam is then a clique.
"""

from beamplace.bench import generate_scenario
from beamplace.compat import build_graph, complement, max_degree, min_degree

sc = generate_scenario(200, seed=1)
g = build_graph(sc.user_points, sc.sat_point, sc.alpha_max)
gc = complement(g)
print(f"{g.n} users, {g.n_edges} edges (density {2 * g.n_edges / (g.n * (g.n - 1)):.3f})")
print(f"min degree {min_degree(g)}, max complement degree {max_degree(gc)}")

# Any greedy clique cover uses at most max_degree(complement) + 1 beams.
print(f"beam count bound K + 1 - min degree = {g.n + 1 - min_degree(g)}")
