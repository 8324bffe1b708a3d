"""
Exact strong coloring numbers
=============================

col_t interpolates between the degeneracy (t = 1) and the treewidth
(t = n, where col_n = tw + 1). The exact solver searches over suffix sets and
is cross-checked here against plain permutation enumeration.
"""

from dynchroma import cycle_graph, exact_col_t, exact_col_t_bruteforce, random_k_tree
from dynchroma.graph import complete_graph, gnp_graph, subdivide

g = gnp_graph(8, 0.45, seed=5)
print("G(8, .45): col_t for t=1..6:", [exact_col_t(g, t).value for t in range(1, 7)])
print("brute force agrees at t=2:", exact_col_t_bruteforce(g, 2).value == exact_col_t(g, 2).value)

res = exact_col_t(cycle_graph(5), 2)
print("C_5:", res.to_json())

# %%
for k in (1, 2, 3):
    kt = random_k_tree(k, 10, seed=k)
    print(f"random {k}-tree: col_10 = {exact_col_t(kt.graph, 10).value}")

# %%
# Subdividing once keeps col_1 at 3 while col_2 grows with n.
for n in (4, 5):
    once = subdivide(complete_graph(n), 1).graph
    print(f"K'_{n}: col_1 = {exact_col_t(once, 1).value}, col_2 = {exact_col_t(once, 2).value}")
