"""Graph model, block decomposition and outerplanarity recognition.

Vertices are the dense integers ``0..n-1``. All objects are immutable once
built; every function here is pure.
"""

from __future__ import annotations

import heapq
from collections.abc import Iterable, Sequence
from dataclasses import dataclass

from .errors import GraphError, NotBiconnected, NotOuterplanar
from .spine import Edge, SpineOrder, has_crossing, norm


class Graph:
    """Simple undirected graph on vertices ``0..n-1``."""

    __slots__ = ("n", "edges", "adjacency", "_edge_set")

    def __init__(self, n: int, edges: Iterable[Edge]):
        if n < 0:
            raise GraphError(f"negative vertex count {n}")
        seen: set[Edge] = set()
        adj: list[list[int]] = [[] for _ in range(n)]
        for raw in edges:
            u, v = int(raw[0]), int(raw[1])
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) has an endpoint outside [0, {n})")
            e = norm(u, v)
            if e in seen:
                raise GraphError(f"duplicate edge {e}")
            seen.add(e)
            adj[u].append(v)
            adj[v].append(u)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "edges", tuple(sorted(seen)))
        object.__setattr__(self, "_edge_set", frozenset(seen))
        object.__setattr__(self, "adjacency", tuple(tuple(sorted(a)) for a in adj))

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={list(self.edges)!r})"

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.edges == other.edges

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    @property
    def m(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def has_edge(self, u: int, v: int) -> bool:
        return norm(u, v) in self._edge_set

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adjacency[v]


def build_graph(n: int, edge_list: Iterable[Sequence[int]]) -> Graph:
    """Validated constructor. Duplicates are rejected rather than collapsed."""
    return Graph(n, (tuple(e) for e in edge_list))


def max_degree(g: Graph) -> int:
    return max((len(a) for a in g.adjacency), default=0)


def degree2_vertices(g: Graph) -> list[int]:
    return [v for v in range(g.n) if len(g.adjacency[v]) == 2]


def subgraph(g: Graph, edges: Iterable[Edge]) -> tuple[Graph, tuple[int, ...]]:
    """Edge-induced subgraph relabelled densely.

    Returns the subgraph and ``labels`` with ``labels[local] == original``.
    """
    edges = list(edges)
    labels = tuple(sorted({v for e in edges for v in e}))
    local = {v: i for i, v in enumerate(labels)}
    return Graph(len(labels), ((local[u], local[v]) for u, v in edges)), labels


def connected_components(g: Graph) -> list[list[int]]:
    """Vertex sets of the components, each sorted, ordered by smallest vertex."""
    seen = [False] * g.n
    comps = []
    for s in range(g.n):
        if seen[s]:
            continue
        seen[s] = True
        comp = [s]
        stack = [s]
        while stack:
            v = stack.pop()
            for w in g.adjacency[v]:
                if not seen[w]:
                    seen[w] = True
                    comp.append(w)
                    stack.append(w)
        comps.append(sorted(comp))
    return comps


@dataclass(frozen=True)
class Block:
    vertices: tuple[int, ...]
    edges: tuple[Edge, ...]


@dataclass(frozen=True)
class BlockDecomposition:
    """Blocks ordered by smallest vertex; ``block_tree`` maps each cut vertex
    to the indices of the blocks containing it."""

    blocks: tuple[Block, ...]
    cut_vertices: frozenset[int]
    block_tree: dict[int, tuple[int, ...]]

    def blocks_at(self, v: int) -> tuple[int, ...]:
        return self.block_tree.get(v, ())


def blocks(g: Graph) -> BlockDecomposition:
    """Biconnected components by iterative lowpoint DFS (Hopcroft-Tarjan).

    Disconnected graphs are decomposed per component. Isolated vertices
    belong to no block.
    """
    n = g.n
    adj = g.adjacency
    disc = [-1] * n
    low = [0] * n
    t = 0
    found: list[Block] = []
    for root in range(n):
        if disc[root] != -1 or not adj[root]:
            continue
        disc[root] = low[root] = t
        t += 1
        edge_stack: list[Edge] = []
        stack = [(root, -1, iter(adj[root]))]
        while stack:
            v, parent, it = stack[-1]
            descended = False
            for w in it:
                if disc[w] == -1:
                    edge_stack.append((v, w))
                    disc[w] = low[w] = t
                    t += 1
                    stack.append((w, v, iter(adj[w])))
                    descended = True
                    break
                if w != parent and disc[w] < disc[v]:
                    edge_stack.append((v, w))
                    if disc[w] < low[v]:
                        low[v] = disc[w]
            if descended:
                continue
            stack.pop()
            if not stack:
                continue
            u = stack[-1][0]
            if low[v] < low[u]:
                low[u] = low[v]
            if low[v] >= disc[u]:
                comp: list[Edge] = []
                while True:
                    e = edge_stack.pop()
                    comp.append(norm(*e))
                    if e == (u, v):
                        break
                verts = tuple(sorted({x for e in comp for x in e}))
                found.append(Block(verts, tuple(sorted(comp))))
    found.sort(key=lambda b: (b.vertices, b.edges))
    membership: dict[int, list[int]] = {}
    for i, b in enumerate(found):
        for v in b.vertices:
            membership.setdefault(v, []).append(i)
    tree = {v: tuple(ids) for v, ids in membership.items() if len(ids) >= 2}
    return BlockDecomposition(tuple(found), frozenset(tree), tree)


def is_biconnected(g: Graph) -> bool:
    """Connected, at least 3 vertices, no cut vertex. K2 is *not* biconnected."""
    if g.n < 3:
        return False
    dec = blocks(g)
    return len(dec.blocks) == 1 and len(dec.blocks[0].vertices) == g.n


@dataclass(frozen=True)
class OuterplanarWitness:
    """The hamiltonian cycle of a biconnected outerplanar graph plus its chords."""

    cycle_order: SpineOrder
    chords: frozenset[Edge]

    def cycle_edges(self) -> list[Edge]:
        seq = self.cycle_order.sequence
        return [norm(seq[i], seq[(i + 1) % len(seq)]) for i in range(len(seq))]

    def successor(self, v: int) -> int:
        seq = self.cycle_order.sequence
        return seq[(self.cycle_order.position[v] + 1) % len(seq)]

    def predecessor(self, v: int) -> int:
        seq = self.cycle_order.sequence
        return seq[self.cycle_order.position[v] - 1]


def _canonical_cycle(nxt: dict[int, int], prv: dict[int, int]) -> tuple[int, ...]:
    # start at the lowest label, head towards its lower-labelled cycle neighbour
    start = min(nxt)
    step = nxt if nxt[start] <= prv[start] else prv
    seq = [start]
    v = step[start]
    while v != start:
        seq.append(v)
        v = step[v]
    return tuple(seq)


def recognize_outerplanar(g: Graph) -> OuterplanarWitness:
    """Extract the unique hamiltonian cycle of a biconnected outerplanar graph.

    Degree-2 peeling: repeatedly remove the lowest-labelled degree-2 vertex
    ``v`` with neighbours ``a, b``, adding ``ab`` if absent, until a triangle
    remains; then re-insert the peeled vertices in reverse order. The result
    is checked (cycle edges real, chords noncrossing) before it is returned.

    The cycle starts at vertex 0 and runs towards its lower-labelled neighbour.
    """
    if not is_biconnected(g):
        raise NotBiconnected("graph is not biconnected")
    adj = [set(a) for a in g.adjacency]
    heap = [v for v in range(g.n) if len(adj[v]) == 2]
    heapq.heapify(heap)
    removed = [False] * g.n
    peeled: list[tuple[int, int, int]] = []
    alive = g.n
    while alive > 3:
        v = -1
        while heap:
            c = heapq.heappop(heap)
            if not removed[c] and len(adj[c]) == 2:
                v = c
                break
        if v < 0:
            raise NotOuterplanar("degree-2 peeling stalled")
        a, b = sorted(adj[v])
        adj[a].discard(v)
        adj[b].discard(v)
        removed[v] = True
        alive -= 1
        if b in adj[a]:
            for x in (a, b):
                if len(adj[x]) == 2:
                    heapq.heappush(heap, x)
        else:
            adj[a].add(b)
            adj[b].add(a)
        peeled.append((v, a, b))
    rest = [v for v in range(g.n) if not removed[v]]
    x, y, z = rest
    if not (y in adj[x] and z in adj[y] and x in adj[z]):
        raise NotOuterplanar("peeling did not end on a triangle")
    nxt = {x: y, y: z, z: x}
    prv = {y: x, z: y, x: z}
    for v, a, b in reversed(peeled):
        if nxt[a] == b:
            left, right = a, b
        elif nxt[b] == a:
            left, right = b, a
        else:
            raise NotOuterplanar(f"vertex {v} cannot be re-inserted between {a} and {b}")
        nxt[left] = v
        prv[v] = left
        nxt[v] = right
        prv[right] = v
    order = SpineOrder(_canonical_cycle(nxt, prv))
    seq = order.sequence
    cycle = set()
    for i in range(len(seq)):
        e = norm(seq[i], seq[(i + 1) % len(seq)])
        if not g.has_edge(*e):
            raise NotOuterplanar(f"reconstructed cycle uses non-edge {e}")
        cycle.add(e)
    chords = frozenset(e for e in g.edges if e not in cycle)
    if has_crossing(order.position, chords):
        raise NotOuterplanar("chords cross on the reconstructed cycle")
    return OuterplanarWitness(order, chords)
