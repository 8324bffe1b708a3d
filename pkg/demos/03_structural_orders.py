"""
Orders with guaranteed width
============================

Three constructions certify small strong coloring numbers without search:

* the construction order of a k-tree (width <= k + 1 for every radius t),
* blocks of copies in H ⊠ P following such an order (width <= (2t + 1)(k + 1)),
* originals-first orders of subdivisions (2-width <= 3 once every edge is
  subdivided at least twice).
"""

from dynchroma import (
    complete_graph,
    greedy_r_dynamic,
    order_width,
    product_order,
    random_k_tree,
    reverse_peo_order,
    strong_product_with_path,
    subdivide,
    subdivision_order,
)

kt = random_k_tree(3, 14, seed=11)
o = reverse_peo_order(kt)
print("3-tree on 14 vertices, widths t=1..5:", [order_width(kt.graph, o, t) for t in range(1, 6)])

# %%
base = random_k_tree(2, 6, seed=2)
lp = strong_product_with_path(base, 5)
po = product_order(lp, reverse_peo_order(base))
for t in (1, 2, 3):
    print(f"2-tree x P_5, t={t}: width {order_width(lp.graph, po, t)} <= {(2 * t + 1) * 3}")

# %%
for times in (1, 2):
    sg = subdivide(complete_graph(6), times)
    so = subdivision_order(sg)
    w2 = order_width(sg.graph, so, 2)
    coloring, _ = greedy_r_dynamic(sg.graph, so, 3)
    print(f"K_6 subdivided {times}x: 1-width {order_width(sg.graph, so, 1)}, 2-width {w2}, "
          f"greedy 3-dynamic palette {coloring.palette_size}")
