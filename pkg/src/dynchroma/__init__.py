"""r-dynamic colorings from vertex orders with small strong 2-reach."""

from .dynamic import (
    ChiResult,
    Coloring,
    GreedyStep,
    VerificationReport,
    chi_two_distance,
    exact_chi_r,
    greedy_r_dynamic,
    theorem_bound,
    verify_r_dynamic,
)
from .graph import (
    Graph,
    GraphError,
    KTree,
    LayeredProduct,
    ParseError,
    SubdividedGraph,
    add_universal,
    build_graph,
    complete_graph,
    cycle_graph,
    parse_dimacs,
    parse_edge_list,
    path_graph,
    random_k_tree,
    square,
    strong_product_with_path,
    subdivide,
    write_dimacs,
)
from .ordering import (
    CapExceeded,
    ColNumberResult,
    LinearOrder,
    ReachSet,
    exact_col_t,
    exact_col_t_bruteforce,
    min_backreach_order,
    order_width,
    product_order,
    reach_set,
    reverse_peo_order,
    subdivision_order,
)

__version__ = "0.1.0"
