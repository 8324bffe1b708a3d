"""Linear orders, strong reachability, and strong coloring numbers.

A vertex ``u`` is in ``Reach_t(v)`` when ``u`` is not after ``v`` and some
``u``-``v`` path of length at most ``t`` has every inner vertex strictly after
``v``. The width of an order is the largest reach set; the strong
``t``-coloring number ``col_t`` is the smallest width over all orders.

Everything here works on bitmasks over vertex indices.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from .graph import Graph, KTree, LayeredProduct, SubdividedGraph, bits


class CapExceeded(ValueError):
    """An exact solver was asked for a graph above its vertex cap."""


@dataclass(frozen=True)
class LinearOrder:
    sequence: tuple[int, ...]
    position: tuple[int, ...]

    @classmethod
    def from_sequence(cls, sequence: Iterable[int], n: Optional[int] = None) -> "LinearOrder":
        seq = tuple(sequence)
        size = len(seq) if n is None else n
        if sorted(seq) != list(range(size)):
            raise ValueError(f"not a permutation of 0..{size - 1}: {list(seq)}")
        pos = [0] * size
        for i, v in enumerate(seq):
            pos[v] = i
        return cls(seq, tuple(pos))

    @classmethod
    def identity(cls, n: int) -> "LinearOrder":
        return cls.from_sequence(range(n))

    def __len__(self) -> int:
        return len(self.sequence)

    def later_masks(self) -> list[int]:
        """For each vertex, the mask of vertices strictly after it."""
        out = [0] * len(self.sequence)
        acc = 0
        for v in reversed(self.sequence):
            out[v] = acc
            acc |= 1 << v
        return out

    def to_json(self) -> list[int]:
        return list(self.sequence)


@dataclass(frozen=True)
class ReachSet:
    center: int
    radius: int
    members: frozenset[int]

    def __len__(self) -> int:
        return len(self.members)


@dataclass(frozen=True)
class ColNumberResult:
    t: int
    value: int
    witness: LinearOrder
    method: str  # exact-dp | exact-bruteforce | upper-bound-only

    def to_json(self) -> dict:
        return {"t": self.t, "value": self.value, "method": self.method,
                "witness": self.witness.to_json()}


def reach_mask(g: Graph, v: int, later: int, t: int) -> int:
    """Mask of ``Reach_t(v)`` given the mask ``later`` of vertices after ``v``.

    BFS from ``v`` that only passes through ``later`` vertices; every
    non-later vertex touched within ``t`` steps is collected. The BFS distance
    is a shortest walk through ``later``, which is automatically a simple path.
    """
    masks = g.masks
    found = 1 << v
    visited = found
    frontier = found
    for _ in range(t):
        nb = 0
        f = frontier
        while f:
            low = f & -f
            nb |= masks[low.bit_length() - 1]
            f ^= low
        found |= nb & ~later
        frontier = nb & later & ~visited
        if not frontier:
            break
        visited |= frontier
    return found


def backreach(g: Graph, v: int, suffix: int, t: int) -> int:
    """``|Reach_t(v)|`` when exactly the vertices in ``suffix`` come after ``v``."""
    return reach_mask(g, v, suffix, t).bit_count()


def reach_set(g: Graph, order: LinearOrder, v: int, t: int) -> ReachSet:
    if t < 0:
        raise ValueError("radius must be nonnegative")
    later = order.later_masks()[v]
    return ReachSet(v, t, frozenset(bits(reach_mask(g, v, later, t))))


def reach_sizes(g: Graph, order: LinearOrder, t: int) -> list[int]:
    later = order.later_masks()
    return [reach_mask(g, v, later[v], t).bit_count() for v in range(g.n)]


def order_width(g: Graph, order: LinearOrder, t: int) -> int:
    """Largest ``|Reach_t(v)|`` over all vertices; an upper bound on ``col_t``."""
    _check_order(g, order)
    return max(reach_sizes(g, order, t), default=0)


def _check_order(g: Graph, order: LinearOrder) -> None:
    if len(order) != g.n:
        raise ValueError(f"order has {len(order)} vertices, graph has {g.n}")


def _degeneracy(g: Graph) -> int:
    deg = [g.degree(v) for v in range(g.n)]
    alive = (1 << g.n) - 1
    best = 0
    for _ in range(g.n):
        v = min(bits(alive), key=lambda u: deg[u])
        best = max(best, deg[v])
        alive &= ~(1 << v)
        for u in g.neighbors(v):
            if alive >> u & 1:
                deg[u] -= 1
    return best


def min_backreach_order(g: Graph, t: int) -> LinearOrder:
    """Greedy order built from the back: repeatedly place, in front of the
    current suffix, the vertex with the smallest back-reach (ties: smallest index).
    """
    suffix = 0
    rev = []
    remaining = list(range(g.n))
    while remaining:
        v = min(remaining, key=lambda u: (backreach(g, u, suffix, t), u))
        remaining.remove(v)
        rev.append(v)
        suffix |= 1 << v
    return LinearOrder.from_sequence(reversed(rev))


def exact_col_t(g: Graph, t: int, cap: int = 20) -> ColNumberResult:
    """Exact strong ``t``-coloring number with an optimal witness order.

    ``Reach_t(v)`` only depends on ``v`` and the *set* of vertices after it,
    so orders can be built back to front over suffix sets. We ask, for
    increasing widths ``w``, whether the empty suffix can be grown to the full
    vertex set by steps whose back-reach stays ``<= w``; suffix sets proven
    dead are memoized. The first feasible ``w`` is ``col_t``.
    """
    if g.n > cap:
        raise CapExceeded(f"exact col_t is capped at n <= {cap}, got n={g.n}")
    if g.n == 0:
        return ColNumberResult(t, 0, LinearOrder.identity(0), "exact-dp")
    heuristic = min_backreach_order(g, t)
    upper = order_width(g, heuristic, t)
    lower = 1 if g.m == 0 else _degeneracy(g) + 1 if t >= 1 else 1
    for w in range(lower, upper):
        found = _suffix_search(g, t, w)
        if found is not None:
            return ColNumberResult(t, w, LinearOrder.from_sequence(reversed(found)), "exact-dp")
    return ColNumberResult(t, upper, heuristic, "exact-dp")


def _suffix_search(g: Graph, t: int, w: int) -> Optional[list[int]]:
    full = (1 << g.n) - 1
    dead: set[int] = set()
    path: list[int] = []

    def grow(suffix: int) -> bool:
        if suffix == full:
            return True
        if suffix in dead:
            return False
        options = []
        for v in bits(full & ~suffix):
            size = backreach(g, v, suffix, t)
            if size <= w:
                options.append((size, v))
        options.sort()
        for _, v in options:
            path.append(v)
            if grow(suffix | 1 << v):
                return True
            path.pop()
        dead.add(suffix)
        return False

    return path if grow(0) else None


def exact_col_t_bruteforce(g: Graph, t: int, cap: int = 9) -> ColNumberResult:
    """Minimum width over every permutation; an independent check on ``exact_col_t``."""
    if g.n > cap:
        raise CapExceeded(f"brute-force col_t is capped at n <= {cap}, got n={g.n}")
    full = (1 << g.n) - 1
    best = g.n + 1
    witness: Sequence[int] = tuple(range(g.n))
    for perm in itertools.permutations(range(g.n)):
        later = full
        width = 0
        for v in perm:
            later &= ~(1 << v)
            size = reach_mask(g, v, later, t).bit_count()
            if size >= best:
                break
            width = max(width, size)
        else:
            best, witness = width, perm
    if g.n == 0:
        best = 0
    return ColNumberResult(t, best, LinearOrder.from_sequence(witness, g.n), "exact-bruteforce")


# -- structural orders ----------------------------------------------------------


def reverse_peo_order(kt: KTree) -> LinearOrder:
    """The construction order of a k-tree: every vertex's earlier neighbors form
    a clique of size at most ``k``, so its width is at most ``k + 1`` for all ``t``.
    """
    kt.check()
    return LinearOrder.from_sequence(kt.construction_order)


def product_order(lp: LayeredProduct, h_order: LinearOrder) -> LinearOrder:
    """Group copies of each base vertex into consecutive blocks following
    ``h_order``; inside a block, ascending layer.

    With ``h_order`` a reverse elimination order of a ``k``-tree the width is at
    most ``(2t + 1)(k + 1)``.
    """
    if len(h_order) != lp.h.n:
        raise ValueError("base order does not match the base graph")
    key = lambda v: (h_order.position[lp.projection[v]], lp.layer[v], v)  # noqa: E731
    return LinearOrder.from_sequence(sorted(range(lp.graph.n), key=key))


def subdivision_order(sg: SubdividedGraph) -> LinearOrder:
    """Original vertices first, then subdivision vertices, each by index."""
    g = sg.graph
    first = [v for v in range(g.n) if sg.is_original[v]]
    rest = [v for v in range(g.n) if not sg.is_original[v]]
    return LinearOrder.from_sequence(first + rest)

