"""Matching book embeddings: the certificate object and its verifier.

A certificate is a spine order plus an edge -> page map. It is valid when
every page is a matching whose edges pairwise do not interleave on the spine.
"""

from __future__ import annotations

from collections import defaultdict
from collections.abc import Mapping
from dataclasses import dataclass, field

from .errors import DomainMismatch, InvalidCertificate, RotationInvalid
from .graph import Graph, max_degree
from .spine import Edge, SpineOrder, count_crossings, crosses, has_crossing, norm

__all__ = [
    "BookEmbedding",
    "SpineOrder",
    "VerificationReport",
    "Violation",
    "crosses",
    "kainen_lower_bound",
    "reflect",
    "rotate",
    "total_crossings",
    "verify",
]


@dataclass(frozen=True)
class BookEmbedding:
    order: SpineOrder
    page_of: Mapping[Edge, int]
    pages: int

    def __post_init__(self) -> None:
        if not isinstance(self.order, SpineOrder):
            object.__setattr__(self, "order", SpineOrder(tuple(self.order)))
        if self.pages < 1:
            raise InvalidCertificate(f"page count must be >= 1, got {self.pages}")
        page_of = {}
        for e, p in self.page_of.items():
            p = int(p)
            if not 0 <= p < self.pages:
                raise InvalidCertificate(f"edge {e} on page {p}, outside [0, {self.pages})")
            page_of[norm(*e)] = p
        object.__setattr__(self, "page_of", page_of)

    def edges_on(self, page: int) -> list[Edge]:
        return sorted(e for e, p in self.page_of.items() if p == page)

    def pages_used(self) -> int:
        return len(set(self.page_of.values()))

    def with_order(self, order: SpineOrder) -> BookEmbedding:
        return BookEmbedding(order, self.page_of, self.pages)


@dataclass(frozen=True)
class Violation:
    kind: str  # "missing", "matching" or "crossing"
    edges: tuple[Edge, ...]
    page: int | None = None
    vertex: int | None = None


@dataclass(frozen=True)
class VerificationReport:
    ok: bool
    violations: tuple[Violation, ...]
    pages_used: int
    delta: int
    dispersable: bool
    empty_pages: tuple[int, ...] = field(default=())

    def kinds(self) -> set[str]:
        return {v.kind for v in self.violations}


def _page_violations(order: SpineOrder, page_of: Mapping[Edge, int]) -> list[Violation]:
    by_page: dict[int, list[Edge]] = defaultdict(list)
    for e, p in page_of.items():
        by_page[p].append(e)
    found: list[Violation] = []
    for p in sorted(by_page):
        page_edges = sorted(by_page[p])
        incident: dict[int, list[Edge]] = defaultdict(list)
        for e in page_edges:
            incident[e[0]].append(e)
            incident[e[1]].append(e)
        for v in sorted(incident):
            if len(incident[v]) > 1:
                found.append(Violation("matching", tuple(incident[v]), page=p, vertex=v))
        if has_crossing(order.position, page_edges):
            spans = [order.span(e) for e in page_edges]
            for i in range(len(page_edges)):
                a, b = spans[i]
                for j in range(i + 1, len(page_edges)):
                    c, d = spans[j]
                    if a < c < b < d or c < a < d < b:
                        found.append(Violation("crossing", (page_edges[i], page_edges[j]), page=p))
    return found


def verify(g: Graph, emb: BookEmbedding) -> VerificationReport:
    """Check ``emb`` as a matching book embedding of ``g``. Never mutates inputs."""
    if len(emb.order) != g.n or set(emb.order.sequence) != set(range(g.n)):
        raise DomainMismatch("spine order does not list exactly the graph's vertices")
    for e in emb.page_of:
        if not g.has_edge(*e):
            raise DomainMismatch(f"certificate assigns non-edge {e}")
    violations = [Violation("missing", (e,)) for e in g.edges if e not in emb.page_of]
    violations += _page_violations(emb.order, emb.page_of)
    used = set(emb.page_of.values())
    delta = max_degree(g)
    ok = not violations
    return VerificationReport(
        ok=ok,
        violations=tuple(violations),
        pages_used=len(used),
        delta=delta,
        dispersable=ok and len(used) == delta,
        empty_pages=tuple(p for p in range(emb.pages) if p not in used),
    )


def kainen_lower_bound(g: Graph) -> int:
    """Max degree: every page is a matching, so a vertex needs one page per edge."""
    return max_degree(g)


def total_crossings(order: SpineOrder, edges) -> int:
    """Crossing pairs over all edges regardless of page."""
    return count_crossings(order.position, edges)


def rotate(emb: BookEmbedding, steps: int) -> BookEmbedding:
    """Cyclically shift the spine, keeping every edge on its page.

    This is only guaranteed valid when no two edges interleave at all (the
    outerplanar case); the result is re-checked and ``RotationInvalid`` is
    raised otherwise.
    """
    out = emb.with_order(emb.order.rotated(steps))
    bad = _page_violations(out.order, out.page_of)
    if bad:
        raise RotationInvalid(f"rotation by {steps} breaks the certificate: {bad[0]}")
    return out


def reflect(emb: BookEmbedding) -> BookEmbedding:
    # reversal preserves interleaving, so validity carries over
    return emb.with_order(emb.order.reversed())
