"""Three-page matching embeddings of biconnected outerplanar graphs with
maximum degree at most 3, plus the cycle base cases.

The degree-3 construction contracts reducible configurations until a
diamond or a cycle is left, embeds that, and splits the contracted vertex
back out one step at a time while keeping the spine equal to the
hamiltonian cycle order.
"""

from __future__ import annotations

from dataclasses import dataclass

from .embedding import BookEmbedding
from .errors import InvalidStep, InvariantError, NoFreePage, NoReduction, NotACycle
from .graph import Graph, OuterplanarWitness, connected_components, max_degree, recognize_outerplanar
from .spine import Edge, SpineOrder, norm

PALETTE = (0, 1, 2)


@dataclass(frozen=True)
class Case1:
    """Adjacent degree-2 vertices ``u``-``v`` with outer neighbours ``a``-``u`` and ``v``-``b``.

    In the contracted graph the survivors are relabelled ``vertex_map``
    (small label -> original) and the merged vertex is ``contracted_vertex``.
    """

    u: int
    v: int
    a: int
    b: int
    contracted_vertex: int
    vertex_map: tuple[int, ...]


@dataclass(frozen=True)
class Case2:
    """Triangle ``x``-``z``-``y`` with ``d(z) = 2``, ``d(x) = d(y) = 3``, and
    outer neighbours ``c``-``x``, ``y``-``d``."""

    x: int
    y: int
    z: int
    c: int
    d: int
    contracted_vertex: int
    vertex_map: tuple[int, ...]


ReductionStep = Case1 | Case2


def _cycle_order(g: Graph) -> tuple[int, ...]:
    start = 0
    prev, v = start, min(g.adjacency[start])
    seq = [start]
    while v != start:
        seq.append(v)
        a, b = g.adjacency[v]
        prev, v = v, (b if a == prev else a)
    return tuple(seq)


def is_cycle(g: Graph) -> bool:
    return (
        g.n >= 3
        and all(len(a) == 2 for a in g.adjacency)
        and len(connected_components(g)) == 1
    )


def embed_cycle(g: Graph) -> BookEmbedding:
    """Even cycles alternate pages 0/1; odd cycles put the closing edge on page 2."""
    if not is_cycle(g):
        raise NotACycle("graph is not a single cycle")
    seq = _cycle_order(g)
    t = len(seq)
    page_of = {norm(seq[i], seq[i + 1]): i % 2 for i in range(t - 1)}
    page_of[norm(seq[-1], seq[0])] = 1 if t % 2 == 0 else 2
    return BookEmbedding(SpineOrder(seq), page_of, 2 if t % 2 == 0 else 3)


def embed_diamond(witness: OuterplanarWitness) -> BookEmbedding:
    seq = witness.cycle_order.sequence
    page_of = {norm(seq[i], seq[(i + 1) % 4]): i % 2 for i in range(4)}
    (chord,) = witness.chords
    page_of[chord] = 2
    return BookEmbedding(witness.cycle_order, page_of, 3)


def _survivor_map(n: int, removed: set[int]) -> tuple[tuple[int, ...], dict[int, int]]:
    keep = tuple(v for v in range(n) if v not in removed)
    return keep, {v: i for i, v in enumerate(keep)}


def _make_case1(g: Graph, u: int, v: int, a: int, b: int) -> Case1:
    keep, _ = _survivor_map(g.n, {u, v})
    return Case1(u, v, a, b, len(keep), keep)


def _make_case2(g: Graph, x: int, y: int, z: int, c: int, d: int) -> Case2:
    keep, _ = _survivor_map(g.n, {x, y, z})
    return Case2(x, y, z, c, d, len(keep), keep)


def find_reduction(g: Graph, witness: OuterplanarWitness) -> ReductionStep:
    """Locate a reducible configuration.

    Degree-2 vertices are scanned in label order; an adjacent degree-2 pair
    (checking the cycle predecessor before the successor) wins over a
    triangle anywhere in the graph.
    """
    if max_degree(g) != 3 or g.n < 5:
        raise NoReduction(f"needs max degree 3 and at least 5 cycle edges (n={g.n})")
    deg2 = [s for s in range(g.n) if g.degree(s) == 2]
    pred, succ = witness.predecessor, witness.successor
    for s in deg2:
        p = pred(s)
        if g.degree(p) == 2:
            return _make_case1(g, p, s, pred(p), succ(s))
        q = succ(s)
        if g.degree(q) == 2:
            return _make_case1(g, s, q, pred(s), succ(q))
    for s in deg2:
        x, y = pred(s), succ(s)
        if g.degree(x) == 3 and g.degree(y) == 3 and g.has_edge(x, y):
            c, d = pred(x), succ(y)
            if c != d:
                return _make_case2(g, x, y, s, c, d)
    raise NoReduction("no reducible configuration found")


def _check_step(g: Graph, step: ReductionStep) -> None:
    def need(cond: bool, what: str) -> None:
        if not cond:
            raise InvalidStep(f"{type(step).__name__}: {what}")

    if isinstance(step, Case1):
        u, v, a, b = step.u, step.v, step.a, step.b
        need(g.has_edge(u, v), "uv is not an edge")
        need(g.degree(u) == 2 and g.degree(v) == 2, "d(u) and d(v) must be 2")
        need(a != b, "a == b")
        need(g.has_edge(a, u) and g.has_edge(b, v), "au and bv must be edges")
    else:
        x, y, z, c, d = step.x, step.y, step.z, step.c, step.d
        need(g.has_edge(x, y) and g.has_edge(y, z) and g.has_edge(x, z), "xyz is not a triangle")
        need(g.degree(z) == 2, "d(z) must be 2")
        need(g.degree(x) == 3 and g.degree(y) == 3, "d(x) and d(y) must be 3")
        need(c != d, "c == d")
        need(g.has_edge(c, x) and g.has_edge(d, y), "cx and dy must be edges")


def _removed(step: ReductionStep) -> set[int]:
    if isinstance(step, Case1):
        return {step.u, step.v}
    return {step.x, step.y, step.z}


def _attachments(step: ReductionStep) -> tuple[int, int]:
    if isinstance(step, Case1):
        return step.a, step.b
    return step.c, step.d


def contract_step(g: Graph, step: ReductionStep) -> Graph:
    """Merge the configuration into one vertex joined to the two outer neighbours."""
    _check_step(g, step)
    gone = _removed(step)
    keep = step.vertex_map
    if len(keep) + len(gone) != g.n:
        raise InvalidStep("vertex_map does not match the graph")
    local = {v: i for i, v in enumerate(keep)}
    w = step.contracted_vertex
    edges = [(local[p], local[q]) for p, q in g.edges if p not in gone and q not in gone]
    first, second = _attachments(step)
    edges.append((local[first], w))
    edges.append((local[second], w))
    return Graph(len(keep) + 1, edges)


def _contract_witness(witness: OuterplanarWitness, step: ReductionStep) -> OuterplanarWitness:
    # cycle of the contracted graph, derived without re-running recognition
    gone = _removed(step)
    local = {v: i for i, v in enumerate(step.vertex_map)}
    w = step.contracted_vertex
    seq: list[int] = []
    for v in witness.cycle_order.sequence:
        if v in gone:
            if not seq or seq[-1] != w:
                seq.append(w)
        else:
            seq.append(local[v])
    if len(seq) > 1 and seq[-1] == w and seq[0] == w:
        seq.pop()
    chords = frozenset(
        norm(local[p], local[q]) for p, q in witness.chords if p not in gone and q not in gone
    )
    start = seq.index(0)
    seq = seq[start:] + seq[:start]
    if seq[-1] < seq[1]:
        seq = [seq[0]] + seq[:0:-1]
    return OuterplanarWitness(SpineOrder(tuple(seq)), chords)


def _free_page(used: set[int]) -> int:
    for p in PALETTE:
        if p not in used:
            return p
    raise NoFreePage(f"pages {sorted(used)} leave no free page")


def split_and_color(emb_small: BookEmbedding, step: ReductionStep) -> BookEmbedding:
    """Undo one contraction on the certificate.

    The merged vertex is replaced in place on the spine (``u, v`` or
    ``x, z, y``, first vertex on the side of ``a``/``c``); old edges keep
    their pages and the new edges take pages as in the colour argument.
    """
    if emb_small.pages > 3:
        raise InvalidStep("contracted certificate uses more than 3 pages")
    keep = step.vertex_map
    w = step.contracted_vertex
    local = {v: i for i, v in enumerate(keep)}
    first, second = _attachments(step)
    seq = list(emb_small.order.sequence)
    pos = emb_small.order.position[w]
    before, after = seq[pos - 1], seq[(pos + 1) % len(seq)]
    if before == local[first] and after == local[second]:
        forward = True
    elif before == local[second] and after == local[first]:
        forward = False
    else:
        raise InvariantError("contracted vertex is not between its two neighbours on the spine")

    page_of: dict[Edge, int] = {}
    for (p, q), page in emb_small.page_of.items():
        if p != w and q != w:
            page_of[norm(keep[p], keep[q])] = page
    p_first = emb_small.page_of[norm(local[first], w)]
    p_second = emb_small.page_of[norm(local[second], w)]
    if p_first == p_second:
        raise InvariantError("contracted vertex has both edges on one page")

    if isinstance(step, Case1):
        inserted = [step.u, step.v]
        page_of[norm(step.a, step.u)] = p_first
        page_of[norm(step.b, step.v)] = p_second
        page_of[norm(step.u, step.v)] = _free_page({p_first, p_second})
    else:
        inserted = [step.x, step.z, step.y]
        third = _free_page({p_first, p_second})
        page_of[norm(step.c, step.x)] = p_first
        page_of[norm(step.d, step.y)] = p_second
        page_of[norm(step.y, step.z)] = p_first
        page_of[norm(step.x, step.z)] = p_second
        page_of[norm(step.x, step.y)] = third
    if not forward:
        inserted.reverse()
    new_seq = [keep[v] for v in seq[:pos]] + inserted + [keep[v] for v in seq[pos + 1:]]
    return BookEmbedding(SpineOrder(tuple(new_seq)), page_of, 3)


def embed_delta3(g: Graph) -> BookEmbedding:
    """Three-page certificate for a biconnected outerplanar graph with max degree 3."""
    if max_degree(g) != 3:
        raise InvalidStep(f"embed_delta3 needs max degree 3, got {max_degree(g)}")
    witness = recognize_outerplanar(g)
    steps: list[ReductionStep] = []
    cur = g
    while True:
        if max_degree(cur) == 2:
            emb = embed_cycle(cur)
            break
        if cur.n == 4:
            emb = embed_diamond(witness)
            break
        step = find_reduction(cur, witness)
        steps.append(step)
        cur = contract_step(cur, step)
        witness = _contract_witness(witness, step)
    for step in reversed(steps):
        emb = split_and_color(emb, step)
    return emb
