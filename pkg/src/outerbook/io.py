"""Text formats for graphs and certificates.

Both formats are line oriented: a versioned header line, then one record
per line as a keyword followed by whitespace-separated fields. ``#`` starts
a comment line. Serialisation is canonical (sorted records, no comments) so
documents diff cleanly and round-trip byte for byte.

Graph::

    outerbook-graph 1
    n 4
    edge 0 1
    label 0 north

Certificate::

    outerbook-certificate 1
    order 0 1 2 3
    pages 3
    assign 0 1 0
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .embedding import BookEmbedding
from .errors import GraphError, ParseError, ValidationError
from .graph import Graph
from .spine import SpineOrder

GRAPH_HEADER = "outerbook-graph"
CERT_HEADER = "outerbook-certificate"
VERSION = 1


@dataclass(frozen=True)
class GraphDocument:
    graph: Graph
    labels: dict[int, str] = field(default_factory=dict)
    version: int = VERSION


@dataclass(frozen=True)
class CertificateDocument:
    embedding: BookEmbedding
    version: int = VERSION


def _records(text: str):
    """Yield ``(line_no, tokens, columns)`` for non-blank, non-comment lines."""
    for no, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        tokens, cols = [], []
        col = 0
        for tok in line.split():
            col = line.index(tok, col)
            tokens.append(tok)
            cols.append(col + 1)
            col += len(tok)
        yield no, tokens, cols, line


def _int(tok: str, no: int, col: int, what: str) -> int:
    try:
        value = int(tok)
    except ValueError:
        raise ParseError(f"expected integer {what}, got {tok!r}", no, col) from None
    if value < 0:
        raise ParseError(f"{what} must be non-negative, got {value}", no, col)
    return value


def _arity(tokens, cols, no, count: int) -> None:
    if len(tokens) != count:
        raise ParseError(f"{tokens[0]!r} takes {count - 1} field(s), got {len(tokens) - 1}", no, cols[0])


def _header(records, expected: str) -> None:
    try:
        no, tokens, cols, _ = next(records)
    except StopIteration:
        raise ParseError(f"empty document, expected {expected!r} header") from None
    if tokens[0] != expected:
        raise ParseError(f"expected header {expected!r}, got {tokens[0]!r}", no, cols[0])
    if len(tokens) != 2 or tokens[1] != str(VERSION):
        raise ParseError(f"unsupported {expected} version (want {VERSION})", no, cols[-1])


def parse_graph_document(text: str) -> GraphDocument:
    records = _records(text)
    _header(records, GRAPH_HEADER)
    n = None
    edges: list[tuple[int, int]] = []
    labels: dict[int, str] = {}
    for no, tokens, cols, line in records:
        key = tokens[0]
        if key == "n":
            _arity(tokens, cols, no, 2)
            if n is not None:
                raise ParseError("vertex count given twice", no, cols[0])
            n = _int(tokens[1], no, cols[1], "vertex count")
        elif key == "edge":
            _arity(tokens, cols, no, 3)
            if n is None:
                raise ParseError("edge before vertex count", no, cols[0])
            edges.append((_int(tokens[1], no, cols[1], "vertex"), _int(tokens[2], no, cols[2], "vertex")))
        elif key == "label":
            if len(tokens) < 3:
                raise ParseError("label needs a vertex and a name", no, cols[0])
            v = _int(tokens[1], no, cols[1], "vertex")
            if v in labels:
                raise ParseError(f"vertex {v} labelled twice", no, cols[0])
            labels[v] = line[cols[2] - 1:].strip()
        else:
            raise ParseError(f"unknown record {key!r}", no, cols[0])
    if n is None:
        raise ParseError("missing vertex count record 'n'")
    graph = Graph(n, edges)
    bad = [v for v in labels if v >= n]
    if bad:
        raise GraphError(f"label for vertex {bad[0]} outside [0, {n})")
    return GraphDocument(graph, labels)


def parse_graph(text: str) -> Graph:
    return parse_graph_document(text).graph


def serialize_graph(g: Graph, labels: dict[int, str] | None = None) -> str:
    lines = [f"{GRAPH_HEADER} {VERSION}", f"n {g.n}"]
    lines += [f"edge {u} {v}" for u, v in g.edges]
    for v in sorted(labels or {}):
        lines.append(f"label {v} {labels[v]}")
    return "\n".join(lines) + "\n"


def parse_edge_list(text: str) -> GraphDocument:
    """Minimal importer: one ``u v`` pair per line with arbitrary vertex names.

    Names become labels; dense ids follow first appearance.
    """
    ids: dict[str, int] = {}
    edges = []
    for no, tokens, cols, _ in _records(text):
        if len(tokens) != 2:
            raise ParseError("edge-list lines hold exactly two vertex names", no, cols[0])
        pair = []
        for tok in tokens:
            if tok not in ids:
                ids[tok] = len(ids)
            pair.append(ids[tok])
        edges.append(tuple(pair))
    labels = {i: name for name, i in ids.items()}
    return GraphDocument(Graph(len(ids), edges), labels)


def parse_certificate(text: str) -> BookEmbedding:
    records = _records(text)
    _header(records, CERT_HEADER)
    order = None
    pages = None
    assignment: dict[tuple[int, int], int] = {}
    for no, tokens, cols, _ in records:
        key = tokens[0]
        if key == "order":
            if order is not None:
                raise ParseError("order given twice", no, cols[0])
            order = [_int(t, no, c, "vertex") for t, c in zip(tokens[1:], cols[1:])]
            if len(set(order)) != len(order):
                raise ValidationError(f"line {no}: spine order repeats a vertex")
        elif key == "pages":
            _arity(tokens, cols, no, 2)
            if pages is not None:
                raise ParseError("page count given twice", no, cols[0])
            pages = _int(tokens[1], no, cols[1], "page count")
        elif key == "assign":
            _arity(tokens, cols, no, 4)
            u = _int(tokens[1], no, cols[1], "vertex")
            v = _int(tokens[2], no, cols[2], "vertex")
            p = _int(tokens[3], no, cols[3], "page")
            e = (u, v) if u < v else (v, u)
            if e in assignment:
                raise ParseError(f"edge {e} assigned twice", no, cols[0])
            assignment[e] = p
        else:
            raise ParseError(f"unknown record {key!r}", no, cols[0])
    if order is None:
        raise ParseError("missing 'order' record")
    if pages is None:
        raise ParseError("missing 'pages' record")
    known = set(order)
    for e in assignment:
        if e[0] not in known or e[1] not in known:
            raise ValidationError(f"assigned edge {e} has a vertex missing from the order")
    return BookEmbedding(SpineOrder(tuple(order)), assignment, pages)


def serialize_certificate(emb: BookEmbedding) -> str:
    lines = [
        f"{CERT_HEADER} {VERSION}",
        "order" + "".join(f" {v}" for v in emb.order.sequence),
        f"pages {emb.pages}",
    ]
    lines += [f"assign {u} {v} {p}" for (u, v), p in sorted(emb.page_of.items())]
    return "\n".join(lines) + "\n"
