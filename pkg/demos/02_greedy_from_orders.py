"""
Greedy r-dynamic coloring along an order
========================================

Any vertex order whose strong 2-reach sets have size at most w yields an
r-dynamic coloring with at most (w - 1) r + 1 colors. Here the order comes
from the min-backreach heuristic and we compare the palette with the bound
and with the true optimum.
"""

import random

from dynchroma import exact_chi_r, greedy_r_dynamic, min_backreach_order, order_width
from dynchroma import theorem_bound, verify_r_dynamic
from dynchroma.graph import gnp_graph

rng = random.Random(3)
print(f"{'n':>3} {'m':>4} {'w':>3} {'r':>2} {'greedy':>7} {'bound':>6} {'exact':>6}")
for _ in range(6):
    g = gnp_graph(rng.randint(6, 11), 0.35, rng)
    order = min_backreach_order(g, 2)
    w = order_width(g, order, 2)
    for r in (1, 2, 3):
        coloring, trace = greedy_r_dynamic(g, order, r)
        assert verify_r_dynamic(g, coloring, r).ok
        best = exact_chi_r(g, r).value
        print(f"{g.n:>3} {g.m:>4} {w:>3} {r:>2} {coloring.palette_size:>7} "
              f"{theorem_bound(w, r):>6} {best:>6}")

# %%
# The trace shows which colors each step had to avoid.
step = max(trace, key=lambda s: len(s.forbidden_strongly_proper | s.forbidden_neighbors))
print("busiest step:", step)
