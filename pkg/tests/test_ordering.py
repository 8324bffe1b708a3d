import random

import pytest
from hypothesis import given, settings, strategies as st

from dynchroma.graph import (
    KTree,
    build_graph,
    complete_graph,
    cycle_graph,
    empty_graph,
    gnp_graph,
    path_graph,
    random_k_tree,
    strong_product_with_path,
    subdivide,
)
from dynchroma.ordering import (
    CapExceeded,
    LinearOrder,
    exact_col_t,
    exact_col_t_bruteforce,
    min_backreach_order,
    order_width,
    product_order,
    reach_set,
    reverse_peo_order,
    subdivision_order,
)
from oracles import graphs, graphs_with_order, simple_path_reach, simple_path_width


def test_linear_order_inverse():
    o = LinearOrder.from_sequence([2, 0, 1])
    assert o.position == (1, 2, 0)
    with pytest.raises(ValueError):
        LinearOrder.from_sequence([0, 0, 1])


# -- reach sets


def test_first_vertex_reaches_only_itself():
    g = cycle_graph(6)
    o = LinearOrder.from_sequence([3, 0, 1, 2, 4, 5])
    for t in range(5):
        assert reach_set(g, o, 3, t).members == {3}


def test_p6_middle_vertex():
    # v_3 of v_1..v_6: inner vertices must come after v_3, so only v_2 qualifies
    g = path_graph(6)
    assert reach_set(g, LinearOrder.identity(6), 2, 2).members == {1, 2}


def test_complete_last_vertex():
    g = complete_graph(5)
    o = LinearOrder.from_sequence([4, 1, 3, 0, 2])
    assert reach_set(g, o, 2, 1).members == set(range(5))


@settings(max_examples=150)
@given(graphs_with_order(max_n=8), st.integers(0, 5))
def test_bfs_reach_equals_simple_path_reach(go, t):
    # walks through later vertices vs simple paths: must agree
    g, seq = go
    o = LinearOrder.from_sequence(seq, g.n)
    for v in range(g.n):
        rs = reach_set(g, o, v, t)
        assert rs.members == simple_path_reach(g, seq, v, t)
        assert v in rs.members
        assert all(o.position[u] <= o.position[v] for u in rs.members)


@given(graphs_with_order(max_n=8), st.integers(0, 4))
def test_reach_monotone_in_radius(go, t):
    g, seq = go
    o = LinearOrder.from_sequence(seq, g.n)
    for v in range(g.n):
        assert reach_set(g, o, v, t).members <= reach_set(g, o, v, t + 1).members


# -- widths


def test_p6_natural_width():
    assert order_width(path_graph(6), LinearOrder.identity(6), 2) == 2


def test_k5_subdivided_originals_first():
    sg = subdivide(complete_graph(5), 1)
    o = subdivision_order(sg)
    assert order_width(sg.graph, o, 2) == 5
    assert order_width(sg.graph, o, 2) == simple_path_width(sg.graph, o.sequence, 2)


@given(graphs_with_order(min_n=2, max_n=8), st.integers(1, 4))
def test_width_at_least_two_with_an_edge(go, t):
    g, seq = go
    if g.m:
        assert order_width(g, LinearOrder.from_sequence(seq, g.n), t) >= 2


def test_width_size_mismatch():
    with pytest.raises(ValueError):
        order_width(path_graph(3), LinearOrder.identity(4), 1)


# -- exact solvers


@pytest.mark.parametrize("n", [1, 2, 4, 6])
@pytest.mark.parametrize("t", [1, 2, 3])
def test_exact_complete(n, t):
    res = exact_col_t(complete_graph(n), t)
    assert res.value == n and res.method == "exact-dp"


def test_exact_c5():
    res = exact_col_t(cycle_graph(5), 2)
    assert res.value == 3
    assert exact_col_t_bruteforce(cycle_graph(5), 2).value == 3
    assert order_width(cycle_graph(5), res.witness, 2) == 3


def test_exact_p6():
    assert exact_col_t(path_graph(6), 2).value == 2


def test_bruteforce_small():
    assert exact_col_t_bruteforce(complete_graph(3), 1).value == 3
    assert exact_col_t_bruteforce(empty_graph(4), 5).value == 1
    assert exact_col_t(empty_graph(4), 5).value == 1


def test_caps():
    with pytest.raises(CapExceeded, match="20"):
        exact_col_t(path_graph(21), 1)
    with pytest.raises(CapExceeded, match="9"):
        exact_col_t_bruteforce(path_graph(10), 1)
    assert exact_col_t(path_graph(12), 1, cap=12).value == 2


@settings(max_examples=60, deadline=None)
@given(graphs(max_n=7), st.integers(1, 3))
def test_dp_matches_bruteforce(g, t):
    dp = exact_col_t(g, t)
    bf = exact_col_t_bruteforce(g, t)
    assert dp.value == bf.value
    assert order_width(g, dp.witness, t) == dp.value
    assert order_width(g, bf.witness, t) == bf.value


@settings(max_examples=40, deadline=None)
@given(graphs(max_n=8))
def test_exact_monotone_in_t(g):
    values = [exact_col_t(g, t).value for t in range(1, 5)]
    assert values == sorted(values)


@settings(max_examples=30, deadline=None)
@given(graphs(max_n=8), st.integers(1, 3), st.permutations(range(8)))
def test_exact_never_beats_a_real_order(g, t, perm):
    seq = [v for v in perm if v < g.n]
    assert exact_col_t(g, t).value <= order_width(g, LinearOrder.from_sequence(seq, g.n), t)


@pytest.mark.parametrize("k, n, seed", [(1, 7, 0), (2, 8, 1), (3, 9, 2), (2, 10, 5)])
def test_col_n_of_ktree_is_k_plus_one(k, n, seed):
    kt = random_k_tree(k, n, seed)
    assert exact_col_t(kt.graph, n).value == k + 1


# -- structural orders


def test_reverse_peo_triangle():
    kt = random_k_tree(2, 3, seed=0)
    assert order_width(kt.graph, reverse_peo_order(kt), 3) == 3


@pytest.mark.parametrize("seed", range(5))
def test_reverse_peo_2tree(seed):
    kt = random_k_tree(2, 12, seed)
    o = reverse_peo_order(kt)
    assert order_width(kt.graph, o, 2) <= 3
    for v in range(12):
        left = [u for u in kt.graph.neighbors(v) if o.position[u] < o.position[v]]
        assert len(left) <= 2 and kt.graph.is_clique(left)


@pytest.mark.parametrize("seed", range(5))
def test_reverse_peo_3tree_any_radius(seed):
    kt = random_k_tree(3, 12, seed)
    assert order_width(kt.graph, reverse_peo_order(kt), 5) <= 4


def test_reverse_peo_rejects_invalid():
    kt = random_k_tree(2, 7, seed=0)
    with pytest.raises(ValueError):
        reverse_peo_order(KTree(kt.graph, 1, kt.construction_order))


def _clique_ktree(n):
    return KTree(complete_graph(n), n - 1, tuple(range(n)))


def test_product_single_layer_matches_base():
    kt = random_k_tree(2, 6, seed=3)
    lp = strong_product_with_path(kt, 1)
    h_order = reverse_peo_order(kt)
    o = product_order(lp, h_order)
    assert [lp.projection[v] for v in o.sequence] == list(h_order.sequence)
    assert order_width(lp.graph, o, 2) <= 3


def test_product_k2_p3():
    lp = strong_product_with_path(_clique_ktree(2), 3)
    o = product_order(lp, LinearOrder.identity(2))
    assert order_width(lp.graph, o, 2) <= 10


@pytest.mark.parametrize("seed", range(4))
def test_product_random_2tree_p4(seed):
    kt = random_k_tree(2, 6, seed)
    lp = strong_product_with_path(kt, 4)
    o = product_order(lp, reverse_peo_order(kt))
    width = order_width(lp.graph, o, 1)
    assert width <= 9
    assert width == simple_path_width(lp.graph, o.sequence, 1)


def test_product_blocks_are_contiguous():
    kt = random_k_tree(1, 4, seed=2)
    lp = strong_product_with_path(kt, 3)
    o = product_order(lp, reverse_peo_order(kt))
    proj = [lp.projection[v] for v in o.sequence]
    assert proj == [x for x in kt.construction_order for _ in range(3)]
    layers = [lp.layer[v] for v in o.sequence]
    assert layers == [1, 2, 3] * 4


def test_subdivision_order_examples():
    sg = subdivide(complete_graph(4), 2)
    assert order_width(sg.graph, subdivision_order(sg), 2) == 3
    kp = subdivide(complete_graph(5), 1)
    assert order_width(kp.graph, subdivision_order(kp), 1) <= 3
    p4 = subdivide(complete_graph(2), 2)
    assert order_width(p4.graph, subdivision_order(p4), 2) <= 3


@settings(max_examples=30, deadline=None)
@given(graphs(min_n=1, max_n=7), st.integers(2, 4))
def test_subdivision_order_bound(g, times):
    sg = subdivide(g, times)
    o = subdivision_order(sg)
    assert order_width(sg.graph, o, 2) <= 3
    assert all(sg.is_original[v] for v in o.sequence[: g.n])


# -- heuristic


def test_min_backreach_complete():
    assert order_width(complete_graph(5), min_backreach_order(complete_graph(5), 2), 2) == 5


def test_min_backreach_c5_matches_exact():
    g = cycle_graph(5)
    assert order_width(g, min_backreach_order(g, 2), 2) == 3


def _random_tree(n, rng):
    return build_graph(n, [(v, rng.randrange(v)) for v in range(1, n)])


@pytest.mark.parametrize("seed", range(10))
def test_min_backreach_trees(seed):
    rng = random.Random(seed)
    tree = _random_tree(rng.randint(2, 9), rng)
    width = order_width(tree, min_backreach_order(tree, 1), 1)
    assert width <= 2
    assert width == exact_col_t(tree, 1).value


def test_min_backreach_deterministic():
    g = gnp_graph(12, 0.3, seed=4)
    assert min_backreach_order(g, 2) == min_backreach_order(g, 2)


def test_col_result_json():
    res = exact_col_t(cycle_graph(5), 2)
    data = res.to_json()
    assert data["t"] == 2 and data["value"] == 3 and data["method"] == "exact-dp"
    assert sorted(data["witness"]) == list(range(5))
