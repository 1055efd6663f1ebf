"""Exact ground truth for small graphs.

Everything here is brute force and shares nothing with the constructive
embedders beyond the graph and certificate types.
"""

from __future__ import annotations

from collections.abc import Iterator
from dataclasses import dataclass
from itertools import permutations

from .embedding import BookEmbedding
from .errors import CapExceeded, Infeasible
from .graph import Graph, max_degree
from .kernels import color_fixed_order
from .spine import SpineOrder

MAX_ORACLE_VERTICES = 9
MAX_COLORING_EDGES = 24


@dataclass(frozen=True)
class OracleResult:
    mbt: int
    witness: BookEmbedding
    orders_tried: int
    nodes_expanded: int


def exact_mbt_fixed_order(
    g: Graph, order: SpineOrder, page_budget: int
) -> BookEmbedding | None:
    """A matching embedding on ``order`` with at most ``page_budget`` pages, or None."""
    if page_budget < 1:
        raise ValueError("page_budget must be >= 1")
    emb, _ = _search_order(g, order, page_budget)
    return emb


def _search_order(g: Graph, order: SpineOrder, k: int) -> tuple[BookEmbedding | None, int]:
    pages, nodes = color_fixed_order(order.position, g.edges, k)
    if pages is None:
        return None, nodes
    return BookEmbedding(order, dict(zip(g.edges, pages)), max(k, 1)), nodes


def canonical_orders(n: int) -> Iterator[SpineOrder]:
    """Spine orders up to rotation and reflection: vertex 0 first, second label below the last."""
    if n <= 2:
        yield SpineOrder(tuple(range(n)))
        return
    for rest in permutations(range(1, n)):
        if rest[0] < rest[-1]:
            yield SpineOrder((0,) + rest)


def exact_mbt(g: Graph, max_pages: int | None = None, allow_large: bool = False) -> OracleResult:
    """Matching book thickness by iterative deepening over the page count."""
    if g.n > MAX_ORACLE_VERTICES and not allow_large:
        raise CapExceeded(f"{g.n} vertices exceeds the oracle cap of {MAX_ORACLE_VERTICES}")
    if g.m == 0:
        return OracleResult(0, BookEmbedding(SpineOrder(tuple(range(g.n))), {}, 1), 0, 0)
    limit = g.m if max_pages is None else max_pages
    tried = 0
    nodes = 0
    for k in range(max(1, max_degree(g)), limit + 1):
        for order in canonical_orders(g.n):
            tried += 1
            emb, expanded = _search_order(g, order, k)
            nodes += expanded
            if emb is not None:
                return OracleResult(k, emb, tried, nodes)
    raise Infeasible(f"no matching book embedding with at most {limit} pages")


def chromatic_index(g: Graph, allow_large: bool = False) -> int:
    """Edge chromatic number by plain backtracking."""
    if g.m > MAX_COLORING_EDGES and not allow_large:
        raise CapExceeded(f"{g.m} edges exceeds the colouring cap of {MAX_COLORING_EDGES}")
    if g.m == 0:
        return 0
    deg = [g.degree(v) for v in range(g.n)]
    edges = sorted(g.edges, key=lambda e: (-max(deg[e[0]], deg[e[1]]), e))
    k = max(deg)
    while not _edge_colorable(g.n, edges, k):
        k += 1
    return k


def _edge_colorable(n: int, edges: list[tuple[int, int]], k: int) -> bool:
    at = [set() for _ in range(n)]

    def place(i: int, top: int) -> bool:
        if i == len(edges):
            return True
        u, v = edges[i]
        for c in range(min(k, top + 2)):
            if c in at[u] or c in at[v]:
                continue
            at[u].add(c)
            at[v].add(c)
            if place(i + 1, max(top, c)):
                return True
            at[u].discard(c)
            at[v].discard(c)
        return False

    return place(0, -1)


def _noncrossing_chord_sets(n: int) -> Iterator[list[tuple[int, int]]]:
    candidates = [(i, j) for i in range(n) for j in range(i + 2, n) if not (i == 0 and j == n - 1)]
    chosen: list[tuple[int, int]] = []

    def rec(idx: int) -> Iterator[list[tuple[int, int]]]:
        if idx == len(candidates):
            yield list(chosen)
            return
        yield from rec(idx + 1)
        a, b = candidates[idx]
        if all(not (a < c < b < d or c < a < d < b) for c, d in chosen):
            chosen.append((a, b))
            yield from rec(idx + 1)
            chosen.pop()

    yield from rec(0)


def enumerate_biconnected_outerplanar(n: int) -> Iterator[Graph]:
    """Every labelled n-cycle ``0..n-1`` with a set of noncrossing chords.

    No isomorphism reduction: counts are the polygon dissection numbers
    1, 3, 11, 45, 197, 903, 4279, 20793 for n = 3..10.
    """
    if not 3 <= n <= 10:
        raise ValueError(f"n must be in [3, 10], got {n}")
    cycle = [(i, (i + 1) % n) for i in range(n)]
    for chords in _noncrossing_chord_sets(n):
        yield Graph(n, cycle + chords)
