"""Reproducible graph corpora.

Randomness comes from SplitMix64 (Steele, Lea & Flood 2014) so that a seed
pins the same graph on every platform and in any language.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import UnknownFamily
from .graph import Graph

_MASK = (1 << 64) - 1


class SplitMix64:
    def __init__(self, seed: int):
        self.state = seed & _MASK

    def next_u64(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & _MASK
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK
        return z ^ (z >> 31)

    def below(self, bound: int) -> int:
        """Uniform integer in ``[0, bound)`` by rejection."""
        if bound <= 0:
            raise ValueError("bound must be positive")
        limit = (1 << 64) - ((1 << 64) % bound)
        while True:
            x = self.next_u64()
            if x < limit:
                return x % bound

    def random(self) -> float:
        """Uniform float in ``[0, 1)`` from the top 53 bits."""
        return (self.next_u64() >> 11) * (1.0 / (1 << 53))


@dataclass(frozen=True)
class GenSpec:
    family: str
    n: int
    chord_keep_prob: float = 1.0
    seed: int = 0

    def __post_init__(self) -> None:
        if not 0.0 <= self.chord_keep_prob <= 1.0:
            raise ValueError(f"chord_keep_prob {self.chord_keep_prob} outside [0, 1]")
        if self.n < 3:
            raise ValueError(f"cyclic families need n >= 3, got {self.n}")


def _cycle_edges(n: int) -> list[tuple[int, int]]:
    return [(i, (i + 1) % n) for i in range(n)]


def triangulation_chords(n: int, rng: SplitMix64) -> list[tuple[int, int]]:
    """``n - 3`` noncrossing chords of the n-gon by repeated random ear clipping."""
    poly = list(range(n))
    chords = []
    while len(poly) > 3:
        i = rng.below(len(poly))
        a, b = poly[i - 1], poly[(i + 1) % len(poly)]
        chords.append((min(a, b), max(a, b)))
        del poly[i]
    return chords


def gen_maximal_outerplanar(n: int, seed: int) -> Graph:
    if n < 3:
        raise ValueError(f"n must be >= 3, got {n}")
    rng = SplitMix64(seed)
    return Graph(n, _cycle_edges(n) + triangulation_chords(n, rng))


def gen_biconnected_outerplanar(spec: GenSpec) -> Graph:
    """Triangulate, then keep each chord with ``chord_keep_prob``.

    The keep/drop draws continue the triangulation's random stream, so
    ``chord_keep_prob=1`` reproduces :func:`gen_maximal_outerplanar`.
    """
    rng = SplitMix64(spec.seed)
    chords = triangulation_chords(spec.n, rng)
    kept = [c for c in chords if rng.random() < spec.chord_keep_prob]
    return Graph(spec.n, _cycle_edges(spec.n) + kept)


FAMILIES = ("cycle", "path", "star", "fan", "bowtie", "diamond", "k4")


def gen_family(name: str, n: int = 0) -> Graph:
    """Named fixtures. ``bowtie``, ``diamond`` and ``k4`` ignore ``n``."""
    if name == "cycle":
        return Graph(n, _cycle_edges(n))
    if name == "path":
        return Graph(n, [(i, i + 1) for i in range(n - 1)])
    if name == "star":
        return Graph(n, [(0, i) for i in range(1, n)])
    if name == "fan":
        return Graph(n, [(0, i) for i in range(1, n)] + [(i, i + 1) for i in range(1, n - 1)])
    if name == "bowtie":
        return Graph(5, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)])
    if name == "diamond":
        return Graph(4, [(0, 1), (1, 2), (2, 3), (0, 3), (0, 2)])
    if name == "k4":
        return Graph(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])
    raise UnknownFamily(f"unknown family {name!r}; choose from {', '.join(FAMILIES)}")


CORPUS_PROBS = (1.0, 0.9, 0.7, 0.5, 0.3)


def seeded_corpus(count: int = 500, max_n: int = 300) -> list[GenSpec]:
    """The standard scale-up corpus: sizes sweep ``3..max_n`` and densities cycle."""
    span = max_n - 2
    return [
        GenSpec("outerplanar", 3 + (i * 37) % span, CORPUS_PROBS[i % len(CORPUS_PROBS)], i)
        for i in range(count)
    ]


def gen_separable_outerplanar(n: int, seed: int) -> Graph:
    """Connected outerplanar graph with at least one cut vertex.

    Blocks (single edges or random biconnected outerplanar pieces) are hung
    one at a time on a random existing vertex.
    """
    if n < 3:
        raise ValueError(f"separable graphs need n >= 3, got {n}")
    rng = SplitMix64(seed)
    edges: list[tuple[int, int]] = []
    size = 0
    while size < n:
        room = n - size + (1 if size else 0)
        k = 2 + rng.below(min(room, n - 1) - 1)
        if size == 0:
            labels = list(range(k))
        else:
            labels = [rng.below(size)] + list(range(size, size + k - 1))
        if k == 2:
            edges.append((labels[0], labels[1]))
        else:
            piece = gen_biconnected_outerplanar(GenSpec("piece", k, 0.5, rng.next_u64()))
            edges += [(labels[u], labels[v]) for u, v in piece.edges]
        size = max(labels) + 1
    return Graph(n, edges)
