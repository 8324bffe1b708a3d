"""r-dynamic colorings: verification, the ordering-based greedy, exact search.

A coloring is r-dynamic when it is proper and every vertex ``v`` sees at
least ``min(r, deg(v))`` distinct colors on its neighbors. Colors are
positive integers.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Sequence

from .graph import Graph, square
from .ordering import LinearOrder, reach_mask


class BudgetExhausted(RuntimeError):
    pass


@dataclass(frozen=True)
class Coloring:
    colors: tuple[int, ...]

    @classmethod
    def of(cls, colors: Sequence[int]) -> "Coloring":
        return cls(tuple(int(c) for c in colors))

    @property
    def palette_size(self) -> int:
        return max(self.colors, default=0)

    def __len__(self) -> int:
        return len(self.colors)

    def __getitem__(self, v: int) -> int:
        return self.colors[v]

    def to_json(self) -> dict:
        return {"colors": list(self.colors), "palette": self.palette_size}


@dataclass
class VerificationReport:
    r: int
    proper_violations: list[tuple[int, int]] = field(default_factory=list)
    # (vertex, distinct neighbor colors, required count)
    dynamic_violations: list[tuple[int, list[int], int]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.proper_violations and not self.dynamic_violations

    def to_json(self) -> dict:
        return {
            "r": self.r,
            "ok": self.ok,
            "proper_violations": [list(e) for e in self.proper_violations],
            "dynamic_violations": [
                {"vertex": v, "seen": seen, "required": req}
                for v, seen, req in self.dynamic_violations
            ],
        }


def _as_colors(g: Graph, coloring) -> tuple[int, ...]:
    colors = coloring.colors if isinstance(coloring, Coloring) else tuple(coloring)
    if len(colors) != g.n:
        raise ValueError(f"coloring covers {len(colors)} vertices, graph has {g.n}")
    for v, c in enumerate(colors):
        if c is None or int(c) != c or c < 1:
            raise ValueError(f"vertex {v} has no valid color ({c!r})")
    return colors


def verify_r_dynamic(g: Graph, coloring, r: int) -> VerificationReport:
    """Check properness and the per-vertex neighborhood condition exhaustively.

    ``r = 0`` reduces to a plain properness check.
    """
    if r < 0:
        raise ValueError("r must be nonnegative")
    colors = _as_colors(g, coloring)
    report = VerificationReport(r)
    for u, v in g.edges():
        if colors[u] == colors[v]:
            report.proper_violations.append((u, v))
    for v in range(g.n):
        seen = {colors[u] for u in g.neighbors(v)}
        need = min(r, g.degree(v))
        if len(seen) < need:
            report.dynamic_violations.append((v, sorted(seen), need))
    return report


def is_r_dynamic(g: Graph, coloring, r: int) -> bool:
    return verify_r_dynamic(g, coloring, r).ok


@dataclass(frozen=True)
class GreedyStep:
    vertex: int
    reach_size: int  # |Reach_2(vertex)| under the order
    forbidden_strongly_proper: frozenset[int]
    forbidden_neighbors: frozenset[int]
    chosen: int


def greedy_r_dynamic(g: Graph, order: LinearOrder, r: int) -> tuple[Coloring, list[GreedyStep]]:
    """Color along ``order`` with the smallest color that is not forbidden.

    Two kinds of colors are forbidden for the current vertex ``v``:

    * every color already on ``Reach_2(v) - {v}`` (keeps the coloring strongly
      proper, so in particular proper);
    * every color seen by an earlier neighbor ``u`` of ``v`` that so far sees
      at most ``r - 1`` colors (a repeat there could leave ``u`` short).

    Earlier neighbors of ``v`` reach each other in two steps through ``v``, so
    strong properness already gives them pairwise distinct colors, and ``v``
    itself needs no extra care. If the order has 2-reach width ``w`` the
    palette stays within ``(w - 1) * r + 1`` for ``r >= 1`` and ``w`` for ``r = 0``.
    """
    if r < 0:
        raise ValueError("r must be nonnegative")
    if len(order) != g.n:
        raise ValueError(f"order has {len(order)} vertices, graph has {g.n}")
    later = order.later_masks()
    colors = [0] * g.n
    # colors currently on the already-colored neighbors of each vertex
    seen: list[set[int]] = [set() for _ in range(g.n)]
    trace = []
    for v in order.sequence:
        reach = reach_mask(g, v, later[v], 2) & ~(1 << v)
        strong = set()
        m = reach
        while m:
            low = m & -m
            strong.add(colors[low.bit_length() - 1])
            m ^= low
        nbr = set()
        for u in g.neighbors(v):
            if colors[u] and len(seen[u]) <= r - 1:
                nbr |= seen[u]
        blocked = strong | nbr
        c = 1
        while c in blocked:
            c += 1
        colors[v] = c
        for u in g.neighbors(v):
            seen[u].add(c)
        trace.append(GreedyStep(v, reach.bit_count() + 1, frozenset(strong), frozenset(nbr), c))
    return Coloring(tuple(colors)), trace


def theorem_bound(k: int, r: int) -> int:
    """``(k - 1) * r + 1``: the palette guaranteed by an order of 2-reach width ``k``.

    Only meaningful as a bound on the r-dynamic chromatic number for ``r >= 1``.
    """
    if k < 1 or r < 0:
        raise ValueError(f"need k >= 1 and r >= 0, got k={k}, r={r}")
    return (k - 1) * r + 1


# -- exact search ---------------------------------------------------------------


@dataclass(frozen=True)
class ChiResult:
    """Outcome of an exact search.

    ``status`` is ``"exact"`` (``value`` is the chromatic number and
    ``coloring`` a witness), ``"unknown"`` (node budget ran out) or
    ``"lower-bound"`` (no coloring within ``color_cap`` colors).
    """

    r: int
    status: str
    value: Optional[int]
    coloring: Optional[Coloring]
    lower: int
    upper: Optional[int]
    nodes: int

    @property
    def solved(self) -> bool:
        return self.status == "exact"

    def to_json(self) -> dict:
        return {
            "r": self.r,
            "status": self.status,
            "value": self.value,
            "lower": self.lower,
            "upper": self.upper,
            "nodes": self.nodes,
            "coloring": self.coloring.to_json() if self.coloring else None,
        }


DEFAULT_NODE_BUDGET = 10**8


def exact_chi_r(
    g: Graph,
    r: int,
    color_cap: Optional[int] = None,
    node_budget: Optional[int] = None,
) -> ChiResult:
    """Smallest palette admitting an r-dynamic coloring.

    Tries ``d = lower, lower + 1, ...`` where ``lower`` is the trivial bound
    ``min(r, Delta) + 1`` (2 for ``r = 0`` with an edge). Each ``d`` is a
    backtracking search over vertices in descending-degree order; a branch is
    cut as soon as some vertex can no longer reach ``min(r, deg)`` distinct
    neighbor colors even if every uncolored neighbor got a fresh color. A
    vertex may only open the next unused color, which removes color
    permutations. ``color_cap`` defaults to ``Delta**2 + 1``.
    """
    if r < 0:
        raise ValueError("r must be nonnegative")
    delta = g.max_degree()
    cap = delta * delta + 1 if color_cap is None else color_cap
    budget = DEFAULT_NODE_BUDGET if node_budget is None else node_budget
    if g.n == 0:
        return ChiResult(r, "exact", 0, Coloring(()), 0, 0, 0)
    if g.m == 0:
        lower = 1
    else:
        lower = max(2, min(r, delta) + 1)
    search = _DynamicSearch(g, r, budget)
    d = lower
    while d <= cap:
        try:
            colors = search.run(d)
        except BudgetExhausted:
            return ChiResult(r, "unknown", None, None, d, None, search.nodes)
        if colors is not None:
            return ChiResult(r, "exact", d, Coloring(tuple(colors)), d, d, search.nodes)
        d += 1
    return ChiResult(r, "lower-bound", None, None, max(lower, cap + 1), None, search.nodes)


class _DynamicSearch:
    def __init__(self, g: Graph, r: int, budget: int):
        self.g = g
        self.r = r
        self.budget = budget
        self.nodes = 0
        self.order = sorted(range(g.n), key=lambda v: (-g.degree(v), v))
        self.demand = [min(r, g.degree(v)) for v in range(g.n)]

    def run(self, d: int) -> Optional[list[int]]:
        g = self.g
        n = g.n
        nbrs = [g.neighbors(v) for v in range(n)]
        demand = self.demand
        colors = [0] * n
        count = [[0] * (d + 1) for _ in range(n)]
        distinct = [0] * n
        uncolored = [g.degree(v) for v in range(n)]
        if any(min(uncolored[v], d) < demand[v] for v in range(n)):
            return None
        order = self.order

        def feasible(u: int) -> bool:
            return distinct[u] + min(uncolored[u], d - distinct[u]) >= demand[u]

        def assign(i: int, used: int) -> bool:
            if i == n:
                return True
            v = order[i]
            cv = count[v]
            for c in range(1, min(d, used + 1) + 1):
                if cv[c]:
                    continue
                self.nodes += 1
                if self.nodes > self.budget:
                    raise BudgetExhausted
                colors[v] = c
                ok = True
                for u in nbrs[v]:
                    uncolored[u] -= 1
                    if not count[u][c]:
                        distinct[u] += 1
                    count[u][c] += 1
                for u in nbrs[v]:
                    if not feasible(u):
                        ok = False
                        break
                if ok and assign(i + 1, max(used, c)):
                    return True
                for u in nbrs[v]:
                    count[u][c] -= 1
                    if not count[u][c]:
                        distinct[u] -= 1
                    uncolored[u] += 1
                colors[v] = 0
            return False

        return list(colors) if assign(0, 0) else None


def chi_two_distance(g: Graph, node_budget: Optional[int] = None) -> ChiResult:
    """Chromatic number of the square of ``g`` (the 2-distance chromatic number)."""
    sq = square(g)
    return exact_chi_r(sq, 0, node_budget=node_budget)
