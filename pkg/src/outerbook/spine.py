"""Spine orders and the interleaving predicate on arc diagrams."""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field

Edge = tuple[int, int]


def norm(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class SpineOrder:
    """Vertices from top to bottom of the spine (the printing cycle)."""

    sequence: tuple[int, ...]
    position: dict[int, int] = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self) -> None:
        seq = tuple(self.sequence)
        object.__setattr__(self, "sequence", seq)
        pos = {v: i for i, v in enumerate(seq)}
        if len(pos) != len(seq):
            raise ValueError("spine order repeats a vertex")
        object.__setattr__(self, "position", pos)

    def __len__(self) -> int:
        return len(self.sequence)

    def __iter__(self):
        return iter(self.sequence)

    def rotated(self, steps: int) -> SpineOrder:
        if not self.sequence:
            return self
        s = steps % len(self.sequence)
        return SpineOrder(self.sequence[s:] + self.sequence[:s])

    def reversed(self) -> SpineOrder:
        return SpineOrder(self.sequence[::-1])

    def span(self, e: Edge) -> tuple[int, int]:
        a, b = self.position[e[0]], self.position[e[1]]
        return (a, b) if a < b else (b, a)


def interleaved(a: int, b: int, c: int, d: int) -> bool:
    """True iff spans (a, b) and (c, d), each with lo < hi, strictly interleave."""
    return a < c < b < d or c < a < d < b


def crosses(order: SpineOrder, e1: Edge, e2: Edge) -> bool:
    a, b = order.span(e1)
    c, d = order.span(e2)
    return interleaved(a, b, c, d)


def _sorted_spans(position: dict[int, int] | Sequence[int], edges: Iterable[Edge]) -> list[tuple[int, int]]:
    spans = []
    for u, v in edges:
        a, b = position[u], position[v]
        spans.append((a, b) if a < b else (b, a))
    return spans


def has_crossing(position: dict[int, int] | Sequence[int], edges: Iterable[Edge]) -> bool:
    """Stack sweep: the spans are pairwise noncrossing iff they nest like brackets.

    Shared endpoints are allowed. O(m log m).
    """
    spans = _sorted_spans(position, edges)
    events = []
    for idx, (a, b) in enumerate(spans):
        # at one position: closings (inner first) before openings (outer first)
        events.append((b, 0, -a, idx))
        events.append((a, 1, -b, idx))
    events.sort()
    stack: list[int] = []
    for _, kind, _, idx in events:
        if kind == 1:
            stack.append(idx)
        elif not stack or stack.pop() != idx:
            return True
    return False


def count_crossings(position: dict[int, int] | Sequence[int], edges: Iterable[Edge]) -> int:
    """Number of strictly interleaved span pairs, via a Fenwick tree. O(m log m)."""
    spans = sorted(_sorted_spans(position, edges))
    if not spans:
        return 0
    size = max(b for _, b in spans) + 2
    tree = [0] * (size + 1)

    def add(i: int) -> None:
        i += 1
        while i <= size:
            tree[i] += 1
            i += i & -i

    def prefix(i: int) -> int:
        # count of inserted right ends <= i
        i += 1
        s = 0
        while i > 0:
            s += tree[i]
            i -= i & -i
        return s

    total = 0
    i = 0
    while i < len(spans):
        j = i
        start = spans[i][0]
        while j < len(spans) and spans[j][0] == start:
            c, d = spans[j]
            total += prefix(d - 1) - prefix(c)
            j += 1
        for k in range(i, j):
            add(spans[k][1])
        i = j
    return total
