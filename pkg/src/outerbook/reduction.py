"""Matching book embeddings for maximum degree 4 and up, and for arbitrary
(separable or disconnected) outerplanar graphs.

For a biconnected graph the alternate hamiltonian-cycle edges starting after
a degree-2 vertex are set aside as one page. What remains has maximum degree
one lower; its blocks are embedded on their own (recursively when needed)
and glued at cut vertices by permuting each block's pages.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .embedding import BookEmbedding, reflect, rotate
from .errors import CollisionUnresolvable, InvariantError, OrderMismatch, StartNotDegree2
from .graph import (
    BlockDecomposition,
    Graph,
    OuterplanarWitness,
    blocks,
    max_degree,
    recognize_outerplanar,
    subgraph,
)
from .smalldelta import embed_cycle, embed_delta3, is_cycle
from .spine import Edge, SpineOrder, norm


@dataclass(frozen=True)
class ReducedGraph:
    """Marked matching, the residual graph, and the spine rooted at ``start_vertex``."""

    matching: tuple[Edge, ...]
    residual: Graph
    start_vertex: int
    order: SpineOrder


@dataclass(frozen=True)
class BlockPlan:
    graph: Graph
    decomposition: BlockDecomposition
    kinds: tuple[str, ...]  # "small" (max degree <= 3) or "large"
    induced_orders: tuple[SpineOrder, ...]

    def local(self, i: int) -> tuple[Graph, tuple[int, ...], SpineOrder]:
        """Block ``i`` relabelled densely, its labels, and its induced order in local labels."""
        g, labels = subgraph(self.graph, self.decomposition.blocks[i].edges)
        index = {v: k for k, v in enumerate(labels)}
        order = SpineOrder(tuple(index[v] for v in self.induced_orders[i].sequence))
        return g, labels, order


def choose_start(g: Graph, witness: OuterplanarWitness | None = None) -> int:
    """Lowest-labelled degree-2 vertex."""
    for v in range(g.n):
        if g.degree(v) == 2:
            return v
    raise InvariantError("biconnected outerplanar graph without a degree-2 vertex")


def mark_matching(g: Graph, witness: OuterplanarWitness, v1: int) -> ReducedGraph:
    """Mark every second cycle edge from ``(v2, v3)``; ``(v_t, v1)`` is marked iff t is even."""
    if g.degree(v1) != 2:
        raise StartNotDegree2(f"start vertex {v1} has degree {g.degree(v1)}")
    order = witness.cycle_order.rotated(witness.cycle_order.position[v1])
    seq = order.sequence
    t = len(seq)
    matching = tuple(norm(seq[i], seq[(i + 1) % t]) for i in range(1, t, 2))
    marked = set(matching)
    residual = Graph(g.n, (e for e in g.edges if e not in marked))
    return ReducedGraph(matching, residual, v1, order)


def _plan(graph: Graph, order: SpineOrder) -> BlockPlan:
    dec = blocks(graph)
    kinds = []
    induced = []
    for b in dec.blocks:
        deg: dict[int, int] = {}
        for u, v in b.edges:
            deg[u] = deg.get(u, 0) + 1
            deg[v] = deg.get(v, 0) + 1
        kinds.append("small" if max(deg.values()) <= 3 else "large")
        induced.append(SpineOrder(tuple(sorted(b.vertices, key=order.position.__getitem__))))
    return BlockPlan(graph, dec, tuple(kinds), tuple(induced))


def plan_blocks(rg: ReducedGraph) -> BlockPlan:
    return _plan(rg.residual, rg.order)


def _orient(emb: BookEmbedding, target: SpineOrder) -> BookEmbedding:
    seq = emb.order.sequence
    want = target.sequence
    if seq == want:
        return emb
    for cand in (emb, reflect(emb)):
        k = cand.order.position[want[0]]
        if cand.order.rotated(k).sequence == want:
            return rotate(cand, k)
    raise OrderMismatch(f"induced order {want} is not a rotation or reflection of {seq}")


def embed_block(b: Graph, induced_order: SpineOrder) -> BookEmbedding:
    """Embed one block and express the certificate on ``induced_order``."""
    if b.m == 1:
        return BookEmbedding(induced_order, {b.edges[0]: 0}, 1)
    if is_cycle(b):
        emb = embed_cycle(b)
    elif max_degree(b) == 3:
        emb = embed_delta3(b)
    else:
        emb = embed_outerplanar(b)
    return _orient(emb, induced_order)


def compose_blocks(
    plan: BlockPlan, block_embs: list[BookEmbedding], global_order: SpineOrder
) -> BookEmbedding:
    """Glue per-block certificates on the global spine.

    Blocks are visited breadth-first over the block-cut tree from the block
    holding the lowest vertex. Each newly reached block touches already
    placed edges at exactly one cut vertex; its pages there are remapped
    first-fit onto pages still free at that vertex.
    """
    g = plan.graph
    dec = plan.decomposition
    k = max(
        [emb.pages for emb in block_embs]
        + [g.degree(v) for v in dec.cut_vertices]
        + [1]
    )
    locals_ = [plan.local(i)[1] for i in range(len(dec.blocks))]
    used: dict[int, set[int]] = {}
    page_of: dict[Edge, int] = {}
    seen = [False] * len(dec.blocks)
    for root in range(len(dec.blocks)):
        if seen[root]:
            continue
        seen[root] = True
        queue = deque([root])
        while queue:
            i = queue.popleft()
            _place_block(i, block_embs[i], locals_[i], k, used, page_of)
            for v in dec.blocks[i].vertices:
                for j in dec.blocks_at(v):
                    if not seen[j]:
                        seen[j] = True
                        queue.append(j)
    return BookEmbedding(global_order, page_of, k)


def _place_block(
    i: int,
    emb: BookEmbedding,
    labels: tuple[int, ...],
    k: int,
    used: dict[int, set[int]],
    page_of: dict[Edge, int],
) -> None:
    touching = [labels[v] for v in range(len(labels)) if used.get(labels[v])]
    if len(touching) > 1:
        raise CollisionUnresolvable(f"block {i} meets placed edges at {touching}")
    perm: dict[int, int] = {}
    if touching:
        (glue,) = touching
        local_glue = labels.index(glue)
        at_glue = sorted({p for e, p in emb.page_of.items() if local_glue in e})
        free = [c for c in range(k) if c not in used[glue]]
        if len(free) < len(at_glue):
            raise CollisionUnresolvable(f"vertex {glue} has no room for block {i}")
        perm.update(zip(at_glue, free))
    taken = set(perm.values())
    spare = (c for c in range(k) if c not in taken)
    for p in range(emb.pages):
        if p not in perm:
            perm[p] = next(spare, None)
            if perm[p] is None:
                raise CollisionUnresolvable(f"block {i} needs more than {k} pages")
    for (u, v), p in emb.page_of.items():
        e = norm(labels[u], labels[v])
        c = perm[p]
        page_of[e] = c
        used.setdefault(e[0], set()).add(c)
        used.setdefault(e[1], set()).add(c)


def embed_outerplanar(g: Graph) -> BookEmbedding:
    """Certificate for a biconnected outerplanar graph on max(degree) pages
    (3 for odd cycles). The spine is the hamiltonian cycle order."""
    witness = recognize_outerplanar(g)
    delta = max_degree(g)
    if delta == 2:
        return embed_cycle(g)
    if delta == 3:
        return embed_delta3(g)
    rg = mark_matching(g, witness, choose_start(g, witness))
    plan = plan_blocks(rg)
    embs = []
    for i in range(len(plan.decomposition.blocks)):
        b, _, induced = plan.local(i)
        embs.append(embed_block(b, induced))
    residual_emb = compose_blocks(plan, embs, rg.order)
    if residual_emb.pages > delta - 1:
        raise InvariantError(
            f"residual needs {residual_emb.pages} pages, expected at most {delta - 1}"
        )
    page_of = dict(residual_emb.page_of)
    for e in rg.matching:
        page_of[e] = delta - 1
    return BookEmbedding(rg.order, page_of, delta)


def _layout(g: Graph, dec: BlockDecomposition, cycles: list[tuple[int, ...]]) -> SpineOrder:
    # Each block occupies a contiguous run after its entry cut vertex, so
    # blocks nest like brackets and no two edges on the spine interleave.
    n_blocks = len(dec.blocks)
    seen = [False] * n_blocks
    placed = [False] * g.n
    seq: list[int] = []
    membership: dict[int, list[int]] = {}
    for j, b in enumerate(dec.blocks):
        for v in b.vertices:
            membership.setdefault(v, []).append(j)

    def emit(v: int, stack: list) -> None:
        seq.append(v)
        placed[v] = True
        children = [j for j in membership.get(v, ()) if not seen[j]]
        for j in children:
            seen[j] = True
        # reversed so the lowest block is laid out first
        for j in reversed(children):
            stack.append((_rotated_from(cycles[j], v), 1))

    for s in range(g.n):
        if placed[s]:
            continue
        stack: list[tuple[tuple[int, ...], int]] = []
        emit(s, stack)
        while stack:
            cyc, idx = stack.pop()
            if idx >= len(cyc):
                continue
            stack.append((cyc, idx + 1))
            emit(cyc[idx], stack)
    return SpineOrder(tuple(seq))


def _rotated_from(cyc: tuple[int, ...], v: int) -> tuple[int, ...]:
    i = cyc.index(v)
    return cyc[i:] + cyc[:i]


def embed_general(g: Graph) -> BookEmbedding:
    """Certificate for any graph whose blocks are all outerplanar.

    Page count is the larger of the blocks' page counts and the degrees of
    the cut vertices.
    """
    if g.m == 0:
        return BookEmbedding(SpineOrder(tuple(range(g.n))), {}, 1)
    dec = blocks(g)
    cycles = []
    for b in dec.blocks:
        if len(b.edges) == 1:
            cycles.append(b.vertices)
        else:
            local, labels = subgraph(g, b.edges)
            w = recognize_outerplanar(local)
            cycles.append(tuple(labels[v] for v in w.cycle_order.sequence))
    order = _layout(g, dec, cycles)
    plan = _plan(g, order)
    embs = []
    for i in range(len(dec.blocks)):
        b, _, induced = plan.local(i)
        embs.append(embed_block(b, induced))
    return compose_blocks(plan, embs, order)
