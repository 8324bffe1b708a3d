"""Simple undirected graphs, text formats, and the structured generators.

Vertices are always the integers ``0 .. n-1``. DIMACS files are 1-indexed on
disk and shifted on the way in and out.
"""

from __future__ import annotations

import itertools
import json
import random
from dataclasses import dataclass
from typing import Callable, Iterable, Optional, Sequence


class GraphError(ValueError):
    """Raised for structurally invalid graph input."""


class ParseError(GraphError):
    def __init__(self, message: str, line: Optional[int] = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class Graph:
    """Immutable simple graph with sorted neighbor tuples and bitmask rows."""

    __slots__ = ("n", "_adj", "_masks", "_m")

    def __init__(self, n: int, adjacency: Sequence[Iterable[int]]):
        adj = tuple(tuple(sorted(set(nb))) for nb in adjacency)
        if len(adj) != n:
            raise GraphError(f"adjacency has {len(adj)} rows, expected {n}")
        for v, nb in enumerate(adj):
            for u in nb:
                if u == v:
                    raise GraphError(f"self-loop at {v}")
                if not 0 <= u < n or v not in adj[u]:
                    raise GraphError(f"asymmetric adjacency at ({v}, {u})")
        self.n = n
        self._adj = adj
        self._masks = tuple(sum(1 << u for u in nb) for nb in adj)
        self._m = sum(len(nb) for nb in adj) // 2

    @property
    def m(self) -> int:
        return self._m

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self._adj[v]

    def neighbor_mask(self, v: int) -> int:
        return self._masks[v]

    @property
    def masks(self) -> tuple[int, ...]:
        return self._masks

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def max_degree(self) -> int:
        return max((len(nb) for nb in self._adj), default=0)

    def has_edge(self, u: int, v: int) -> bool:
        return (self._masks[u] >> v) & 1 == 1

    def edges(self) -> list[tuple[int, int]]:
        """Edges as ``(u, v)`` with ``u < v``, lexicographically sorted."""
        return [(u, v) for u in range(self.n) for v in self._adj[u] if u < v]

    def vertices(self) -> range:
        return range(self.n)

    def is_clique(self, vertices: Iterable[int]) -> bool:
        vs = list(vertices)
        return all(self.has_edge(a, b) for a, b in itertools.combinations(vs, 2))

    def to_json(self) -> dict:
        return {"n": self.n, "edges": [list(e) for e in self.edges()]}

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self._adj == other._adj

    def __hash__(self) -> int:
        return hash((self.n, self._adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def build_graph(n: int, edges: Iterable[Sequence[int]]) -> Graph:
    """Build a graph from an edge list; duplicates (in either direction) collapse."""
    if n < 0:
        raise GraphError(f"negative vertex count {n}")
    adj: list[set[int]] = [set() for _ in range(n)]
    for pair in edges:
        u, v = pair
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u}, {v}) out of range for n={n}")
        if u == v:
            raise GraphError(f"self-loop ({u}, {v})")
        adj[u].add(v)
        adj[v].add(u)
    return Graph(n, adj)


def graph_from_json(data: dict) -> Graph:
    return build_graph(int(data["n"]), [tuple(e) for e in data["edges"]])


def graph_to_json_text(g: Graph) -> str:
    return json.dumps(g.to_json())


# -- text formats -------------------------------------------------------------


def parse_dimacs(text: str) -> Graph:
    """Parse DIMACS ``.col`` text (``p edge n m`` header, 1-indexed ``e u v`` lines)."""
    n = m = None
    header_line = None
    edges: list[tuple[int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        parts = line.split()
        if parts[0] == "p":
            if n is not None:
                raise ParseError("duplicate problem line", lineno)
            if len(parts) != 4 or parts[1] not in ("edge", "col"):
                raise ParseError(f"malformed header {line!r}", lineno)
            try:
                n, m = int(parts[2]), int(parts[3])
            except ValueError:
                raise ParseError(f"malformed header {line!r}", lineno) from None
            if n < 0 or m < 0:
                raise ParseError(f"negative size in header {line!r}", lineno)
            header_line = lineno
        elif parts[0] == "e":
            if n is None:
                raise ParseError("edge line before problem line", lineno)
            if len(parts) != 3:
                raise ParseError(f"malformed edge line {line!r}", lineno)
            try:
                u, v = int(parts[1]), int(parts[2])
            except ValueError:
                raise ParseError(f"non-integer endpoint in {line!r}", lineno) from None
            if not (1 <= u <= n and 1 <= v <= n):
                raise ParseError(f"vertex index out of range 1..{n} in {line!r}", lineno)
            if u == v:
                raise ParseError(f"self-loop in {line!r}", lineno)
            edges.append((u - 1, v - 1))
        else:
            raise ParseError(f"unrecognized line {line!r}", lineno)
    if n is None:
        raise ParseError("missing problem line")
    if len(edges) != m:
        raise ParseError(f"header declares {m} edges, found {len(edges)}", header_line)
    return build_graph(n, edges)


def write_dimacs(g: Graph) -> str:
    lines = [f"p edge {g.n} {g.m}"]
    lines.extend(f"e {u + 1} {v + 1}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def parse_edge_list(text: str) -> Graph:
    """One ``u v`` pair per line, 0-indexed; ``n`` is one past the largest index.

    Blank lines and ``#`` comments are skipped.
    """
    edges = []
    top = -1
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ParseError(f"expected two vertices, got {line!r}", lineno)
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise ParseError(f"non-integer token in {line!r}", lineno) from None
        if u < 0 or v < 0:
            raise ParseError(f"negative vertex in {line!r}", lineno)
        if u == v:
            raise ParseError(f"self-loop in {line!r}", lineno)
        edges.append((u, v))
        top = max(top, u, v)
    return build_graph(top + 1, edges)


# -- elementary families --------------------------------------------------------


def empty_graph(n: int) -> Graph:
    return build_graph(n, [])


def complete_graph(n: int) -> Graph:
    return build_graph(n, itertools.combinations(range(n), 2))


def path_graph(n: int) -> Graph:
    if n < 1:
        raise GraphError("path needs at least one vertex")
    return build_graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise GraphError("cycle needs at least three vertices")
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


def star_graph(leaves: int) -> Graph:
    """``K_{1,leaves}`` with the center at index 0."""
    return build_graph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def gnp_graph(n: int, p: float, seed=None) -> Graph:
    rng = seed if isinstance(seed, random.Random) else random.Random(seed)
    return build_graph(n, [e for e in itertools.combinations(range(n), 2) if rng.random() < p])


def square(g: Graph) -> Graph:
    """Connect every pair at distance one or two."""
    masks = g.masks
    adj = []
    for v in range(g.n):
        reach = masks[v]
        for u in g.neighbors(v):
            reach |= masks[u]
        reach &= ~(1 << v)
        adj.append(bits(reach))
    return Graph(g.n, adj)


def add_universal(g: Graph, count: int) -> Graph:
    """Append ``count`` vertices adjacent to everything, including each other."""
    if count < 0:
        raise GraphError("count must be nonnegative")
    total = g.n + count
    edges = g.edges()
    for w in range(g.n, total):
        edges.extend((u, w) for u in range(w))
    return build_graph(total, edges)


# -- subdivisions -------------------------------------------------------------


@dataclass(frozen=True)
class SubdividedGraph:
    graph: Graph
    source: Graph
    times: int
    # True for original vertices, False for subdivision vertices
    is_original: tuple[bool, ...]
    # original edge (u, v), u < v, for each subdivision vertex; None for originals
    parent_edge: tuple[Optional[tuple[int, int]], ...]

    def check(self) -> None:
        g = self.graph
        for x in range(g.n):
            if not self.is_original[x] and g.degree(x) != 2:
                raise GraphError(f"subdivision vertex {x} has degree {g.degree(x)}")
        # contract each chain of subdivision vertices back to its endpoints
        recovered = set()
        for x in range(g.n):
            if self.is_original[x]:
                continue
            ends = [u for u in g.neighbors(x) if self.is_original[u]]
            for u in ends:
                if u not in self.parent_edge[x]:
                    raise GraphError(f"subdivision vertex {x} touches non-endpoint {u}")
            recovered.add(self.parent_edge[x])
        direct = {e for e in g.edges() if self.is_original[e[0]] and self.is_original[e[1]]}
        if direct:
            raise GraphError(f"original vertices adjacent in a subdivision: {sorted(direct)}")
        if recovered != set(self.source.edges()):
            raise GraphError("subdivision paths do not recover the source edge set")


def subdivide(g: Graph, times: int) -> SubdividedGraph:
    """Replace each edge by a path with ``times`` interior vertices.

    New vertices follow the originals, grouped per edge in lexicographic edge
    order and listed from the smaller endpoint towards the larger one.
    """
    if times < 1:
        raise GraphError("times must be at least 1")
    edges = []
    is_original = [True] * g.n
    parent: list[Optional[tuple[int, int]]] = [None] * g.n
    nxt = g.n
    for u, v in g.edges():
        chain = [u] + list(range(nxt, nxt + times)) + [v]
        nxt += times
        edges.extend(zip(chain, chain[1:]))
        is_original.extend([False] * times)
        parent.extend([(u, v)] * times)
    return SubdividedGraph(build_graph(nxt, edges), g, times, tuple(is_original), tuple(parent))


# -- k-trees --------------------------------------------------------------------


@dataclass(frozen=True)
class KTree:
    graph: Graph
    k: int
    construction_order: tuple[int, ...]

    def check(self) -> None:
        """Raise GraphError unless the recorded construction is a valid k-tree build."""
        g, k, order = self.graph, self.k, self.construction_order
        if sorted(order) != list(range(g.n)):
            raise GraphError("construction order is not a permutation of the vertices")
        if g.n < k + 1:
            raise GraphError(f"a {k}-tree needs at least {k + 1} vertices")
        if not g.is_clique(order[: k + 1]):
            raise GraphError("base vertices do not form a clique")
        placed = 0
        for i, v in enumerate(order):
            earlier = bits(g.neighbor_mask(v) & placed)
            if i <= k:
                if len(earlier) != i:
                    raise GraphError(f"base vertex {v} has wrong earlier neighborhood")
            elif len(earlier) != k or not g.is_clique(earlier):
                raise GraphError(f"vertex {v} is not attached to a {k}-clique")
            placed |= 1 << v


def random_k_tree(k: int, n: int, seed=0, relabel: bool = True) -> KTree:
    """Random k-tree on ``n`` vertices.

    Each new vertex picks a uniformly random placed vertex ``v`` and a random
    ``k``-subset of ``{v} | N(v)``, retrying until the subset is a clique.
    With ``relabel`` the vertex names are shuffled so that the construction
    order is not simply ``0..n-1``.
    """
    if k < 0:
        raise GraphError("k must be nonnegative")
    if n < k + 1:
        raise GraphError(f"a {k}-tree needs at least {k + 1} vertices, got n={n}")
    rng = random.Random(seed)
    adj: list[set[int]] = [set() for _ in range(n)]
    for a, b in itertools.combinations(range(k + 1), 2):
        adj[a].add(b)
        adj[b].add(a)
    for w in range(k + 1, n):
        while True:
            v = rng.randrange(w)
            pool = sorted(adj[v] | {v})
            if len(pool) < k:
                continue
            host = rng.sample(pool, k)
            if all(b in adj[a] for a, b in itertools.combinations(host, 2)):
                break
        for u in host:
            adj[w].add(u)
            adj[u].add(w)
    labels = list(range(n))
    if relabel:
        rng.shuffle(labels)
    relabeled: list[set[int]] = [set() for _ in range(n)]
    for v in range(n):
        relabeled[labels[v]] = {labels[u] for u in adj[v]}
    return KTree(Graph(n, relabeled), k, tuple(labels))


def ktree_from_graph(g: Graph, k: int, construction_order: Sequence[int]) -> KTree:
    kt = KTree(g, k, tuple(construction_order))
    kt.check()
    return kt


# -- strong products with a path ----------------------------------------------


@dataclass(frozen=True)
class LayeredProduct:
    graph: Graph
    h: Graph
    # layer index in 1..layers per vertex
    layer: tuple[int, ...]
    projection: tuple[int, ...]
    layers: int
    base: Optional[KTree] = None

    def block(self, x: int) -> list[int]:
        """All copies of base vertex ``x``."""
        return [v for v in range(self.graph.n) if self.projection[v] == x]

    def layer_vertices(self, i: int) -> list[int]:
        return [v for v in range(self.graph.n) if self.layer[v] == i]

    def check(self) -> None:
        seen = set()
        for v in range(self.graph.n):
            key = (self.projection[v], self.layer[v])
            if key in seen:
                raise GraphError(f"two vertices map to {key}")
            seen.add(key)
            if not 1 <= self.layer[v] <= self.layers:
                raise GraphError(f"vertex {v} has layer {self.layer[v]} outside 1..{self.layers}")
        for a, b in self.graph.edges():
            if abs(self.layer[a] - self.layer[b]) > 1:
                raise GraphError(f"edge ({a}, {b}) skips a layer")
            x, y = self.projection[a], self.projection[b]
            if x != y and not self.h.has_edge(x, y):
                raise GraphError(f"edge ({a}, {b}) projects to a non-edge ({x}, {y})")


def strong_product_with_path(
    base: KTree | Graph,
    layers: int,
    keep: Optional[Callable[[int, int], bool]] = None,
    keep_edge: Optional[Callable[[tuple[int, int], tuple[int, int]], bool]] = None,
) -> LayeredProduct:
    """Build ``H ⊠ P_layers``, optionally restricted to a subgraph.

    ``keep(x, layer)`` selects vertices; ``keep_edge((x, i), (y, j))`` selects
    edges among the kept vertices. Kept vertices are numbered layer by layer,
    ascending base vertex within a layer.
    """
    if layers < 1:
        raise GraphError("need at least one layer")
    kt = base if isinstance(base, KTree) else None
    h = base.graph if isinstance(base, KTree) else base
    index: dict[tuple[int, int], int] = {}
    layer: list[int] = []
    projection: list[int] = []
    for i in range(1, layers + 1):
        for x in range(h.n):
            if keep is None or keep(x, i):
                index[(x, i)] = len(layer)
                layer.append(i)
                projection.append(x)
    edges = []
    for (x, i), a in index.items():
        for y, j in _product_up_neighbors(h, x, i, layers):
            b = index.get((y, j))
            if b is None:
                continue
            if keep_edge is None or keep_edge((x, i), (y, j)):
                edges.append((a, b))
    lp = LayeredProduct(build_graph(len(layer), edges), h, tuple(layer), tuple(projection), layers, kt)
    return lp


def _product_up_neighbors(h: Graph, x: int, i: int, layers: int):
    # each product edge exactly once: same layer towards larger x, or into layer i+1
    for y in h.neighbors(x):
        if y > x:
            yield y, i
    if i < layers:
        yield x, i + 1
        for y in h.neighbors(x):
            yield y, i + 1


def bits(mask: int) -> list[int]:
    """Indices of the set bits of ``mask``, ascending."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out
