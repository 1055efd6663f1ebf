import itertools
import random

import pytest

from outerbook.errors import GraphError, NotBiconnected, NotOuterplanar
from outerbook.generators import gen_family
from outerbook.graph import (
    Graph,
    blocks,
    build_graph,
    connected_components,
    degree2_vertices,
    is_biconnected,
    max_degree,
    recognize_outerplanar,
    subgraph,
)
from outerbook.oracle import enumerate_biconnected_outerplanar
from outerbook.spine import crosses

from conftest import cycle


def test_build_triangle():
    g = build_graph(3, [(0, 1), (1, 2), (2, 0)])
    assert g.m == 3
    assert max_degree(g) == 2


def test_build_diamond(diamond):
    g = build_graph(4, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)])
    assert g == diamond
    assert max_degree(g) == 3


@pytest.mark.parametrize(
    "n, edges",
    [(2, [(0, 1), (0, 1)]), (2, [(0, 1), (1, 0)]), (3, [(1, 1)]), (3, [(0, 3)]), (3, [(-1, 0)])],
)
def test_build_rejects(n, edges):
    with pytest.raises(GraphError):
        build_graph(n, edges)


def test_graph_is_immutable(diamond):
    with pytest.raises(AttributeError):
        diamond.n = 5


def test_adjacency_symmetric(diamond):
    for u, v in diamond.edges:
        assert v in diamond.neighbors(u) and u in diamond.neighbors(v)
    assert sum(diamond.degree(v) for v in range(diamond.n)) == 2 * diamond.m


@pytest.mark.parametrize(
    "g, expected",
    [(gen_family("diamond"), 3), (cycle(5), 2), (gen_family("star", 5), 4), (Graph(3, []), 0)],
)
def test_max_degree(g, expected):
    assert max_degree(g) == expected


def test_blocks_bowtie(bowtie):
    dec = blocks(bowtie)
    assert len(dec.blocks) == 2
    assert dec.cut_vertices == {2}
    assert dec.block_tree == {2: (0, 1)}


def test_blocks_path():
    dec = blocks(gen_family("path", 3))
    assert [b.edges for b in dec.blocks] == [((0, 1),), ((1, 2),)]
    assert dec.cut_vertices == {1}


def test_blocks_biconnected(c6_two_chords):
    dec = blocks(c6_two_chords)
    assert len(dec.blocks) == 1 and not dec.cut_vertices


def test_blocks_disconnected():
    g = Graph(7, [(0, 1), (1, 2), (2, 0), (4, 5), (5, 6)])
    dec = blocks(g)
    assert [b.vertices for b in dec.blocks] == [(0, 1, 2), (4, 5), (5, 6)]
    assert dec.cut_vertices == {5}


def _connected_without(g: Graph, x: int) -> bool:
    rest = [v for v in range(g.n) if v != x]
    if not rest:
        return True
    seen = {rest[0]}
    stack = [rest[0]]
    while stack:
        v = stack.pop()
        for w in g.neighbors(v):
            if w != x and w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == len(rest)


def _all_connected_graphs(n):
    pairs = list(itertools.combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        g = Graph(n, [p for i, p in enumerate(pairs) if mask >> i & 1])
        if len(connected_components(g)) == 1:
            yield g


@pytest.mark.parametrize("n", [3, 4, 5])
def test_blocks_exhaustive_small(n):
    # every connected graph on n vertices, checked against vertex deletion
    for g in _all_connected_graphs(n):
        dec = blocks(g)
        assert sum(len(b.edges) for b in dec.blocks) == g.m
        assert sorted(e for b in dec.blocks for e in b.edges) == list(g.edges)
        for v in range(g.n):
            assert (v in dec.cut_vertices) == (not _connected_without(g, v))


def test_blocks_sampled_n7():
    rng = random.Random(11)
    pairs = list(itertools.combinations(range(7), 2))
    checked = 0
    while checked < 300:
        g = Graph(7, [p for p in pairs if rng.random() < 0.3])
        if len(connected_components(g)) != 1:
            continue
        checked += 1
        dec = blocks(g)
        for v in range(7):
            assert (v in dec.cut_vertices) == (not _connected_without(g, v))
        for b in dec.blocks:
            if len(b.edges) > 1:
                assert is_biconnected(subgraph(g, b.edges)[0])


def test_is_biconnected():
    assert is_biconnected(cycle(4))
    assert not is_biconnected(gen_family("path", 3))
    assert not is_biconnected(gen_family("bowtie"))
    assert not is_biconnected(Graph(2, [(0, 1)]))  # K2 excluded by convention
    assert not is_biconnected(Graph(1, []))
    assert not is_biconnected(Graph(4, [(0, 1), (1, 2), (2, 0)]))  # isolated vertex 3


def test_recognize_diamond(diamond):
    w = recognize_outerplanar(diamond)
    assert w.cycle_order.sequence == (0, 1, 2, 3)
    assert w.chords == {(0, 2)}


def test_recognize_k4_fails():
    with pytest.raises(NotOuterplanar):
        recognize_outerplanar(gen_family("k4"))


def test_recognize_k23_fails():
    # biconnected, has degree-2 vertices, but not outerplanar
    with pytest.raises(NotOuterplanar):
        recognize_outerplanar(Graph(5, [(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)]))


def test_recognize_not_biconnected(bowtie):
    with pytest.raises(NotBiconnected):
        recognize_outerplanar(bowtie)


def test_recognize_c7():
    w = recognize_outerplanar(cycle(7))
    assert w.cycle_order.sequence == tuple(range(7))
    assert not w.chords


def test_recognize_scrambled_cycle():
    perm = [4, 0, 6, 2, 5, 1, 3]
    g = Graph(7, [(perm[i], perm[(i + 1) % 7]) for i in range(7)] + [(perm[0], perm[3])])
    w = recognize_outerplanar(g)
    seq = w.cycle_order.sequence
    for i in range(7):
        assert g.has_edge(seq[i], seq[(i + 1) % 7])
    assert w.chords == {tuple(sorted((perm[0], perm[3])))}


def test_degree2_vertices(diamond):
    assert degree2_vertices(diamond) == [1, 3]
    assert degree2_vertices(cycle(6)) == list(range(6))


def _cyclic_forms(seq):
    n = len(seq)
    forms = set()
    for s in (seq, seq[::-1]):
        for i in range(n):
            forms.add(tuple(s[i:] + s[:i]))
    return forms


@pytest.mark.parametrize("n", [3, 4, 5, 6, 7])
def test_enumerated_outerplanar_properties(n):
    rng = random.Random(n)
    for g in enumerate_biconnected_outerplanar(n):
        w = recognize_outerplanar(g)
        # enumerated graphs are built on the cycle 0..n-1
        assert tuple(w.cycle_order.sequence) in _cyclic_forms(tuple(range(n)))
        assert len(degree2_vertices(g)) >= 2
        chords = sorted(w.chords)
        for i, a in enumerate(chords):
            for b in chords[i + 1:]:
                assert not crosses(w.cycle_order, a, b)
        # uniqueness: relabelling moves the cycle with the labels
        perm = list(range(n))
        rng.shuffle(perm)
        h = Graph(n, [(perm[u], perm[v]) for u, v in g.edges])
        wh = recognize_outerplanar(h)
        mapped = tuple(perm[v] for v in w.cycle_order.sequence)
        assert tuple(wh.cycle_order.sequence) in _cyclic_forms(mapped)
