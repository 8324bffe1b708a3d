"""
Subdivided cliques and the universal-vertex drop
================================================

The complete subdivision K'_n is bipartite, yet every 2-dynamic coloring
needs n colors: two originals sharing a color would leave the subdivision
vertex between them seeing a single color. Adding universal vertices makes
the problem *easier*.
"""

from dynchroma import add_universal, complete_graph, exact_chi_r, subdivide, verify_r_dynamic

sg = subdivide(complete_graph(5), 1)
g = sg.graph
print(f"K'_5: {g.n} vertices, {g.m} edges")

# Originals colored 1..5, each subdivision vertex with a color unlike its ends.
colors = list(range(1, 6))
for x in range(5, g.n):
    u, v = sg.parent_edge[x]
    colors.append(min(c for c in (1, 2, 3) if c not in (u + 1, v + 1)))
print("hand-made 5-coloring is 2-dynamic:", verify_r_dynamic(g, colors, 2).ok)

# Merging two original colors breaks it exactly at their shared subdivision vertex.
broken = list(colors)
broken[1] = broken[0]
broken[sg.parent_edge.index((0, 1))] = 3
print("after merging originals 0 and 1:", verify_r_dynamic(g, broken, 2).dynamic_violations)

# %%
# Exact values, with and without universal vertices.
for n in (4, 5):
    print(f"chi_2(K'_{n}) =", exact_chi_r(subdivide(complete_graph(n), 1).graph, 2).value)

print("chi_2(K'_5 + 1 universal) =", exact_chi_r(add_universal(g, 1), 2).value)
print("chi_3(K'_5 + 1 universal) =", exact_chi_r(add_universal(g, 1), 3).value)
print("chi_3(K'_5 + 2 universal) =", exact_chi_r(add_universal(g, 2), 3).value)
