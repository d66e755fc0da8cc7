"""
Solving one scenario
====================

TGBP (greedy clique cover plus load balancing), BK-Means (bisection over
the beam count with K-means probes) and, for a small instance, the exact
minimum clique cover.
"""

from beamplace.bench import generate_scenario, solve_scenario
from beamplace.evaluation import evaluate

for n_users in (12, 300):
    sc = generate_scenario(n_users, seed=7)
    algorithms = ["tgbp", "bkmeans"] + (["exact"] if n_users <= 16 else [])
    print(f"--- {n_users} users")
    for alg in algorithms:
        sol, graph, ms = solve_scenario(sc, alg)
        ev = evaluate(sol, sc.user_points, sc.sat_point, sc.link_budget, ms)
        print(
            f"{alg:8s} beams={ev.nabs:3d} gap={ev.load_gap:3d} "
            f"min={ev.min_scgnr_db:6.2f} dB avg={ev.avg_scgnr_db:6.2f} dB  {ms:8.1f} ms"
        )

# %%
# TGBP's phase 2 only trades users between beams; the beam count is the one
# phase 1 found.
from beamplace.compat import build_graph
from beamplace.solve import balance_refine, greedy_clique_cover

sc = generate_scenario(300, seed=7)
g = build_graph(sc.user_points, sc.sat_point, sc.alpha_max)
start = greedy_clique_cover(g)
trace = []
done = balance_refine(start, g, trace)
print(f"phase 1 sizes gap {start.load_gap} -> after {done.moves_used} moves gap {done.load_gap}")
print(f"balancing indicator {trace[0]} -> {trace[-1]}")
