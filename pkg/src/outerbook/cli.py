"""Command-line interface.

Exit codes: 0 success, 2 parse error, 3 validation failure, 4 infeasible or
over the search cap, 5 broken internal invariant.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

from .embedding import SpineOrder, verify
from .errors import Infeasible, InvariantError, OuterbookError
from .generators import FAMILIES, GenSpec, gen_biconnected_outerplanar, gen_family, gen_maximal_outerplanar
from .graph import max_degree
from .io import (
    GraphDocument,
    parse_certificate,
    parse_edge_list,
    parse_graph_document,
    serialize_certificate,
    serialize_graph,
)
from .oracle import exact_mbt, exact_mbt_fixed_order, enumerate_biconnected_outerplanar
from .reduction import embed_general
from .render import render_svg

CORPUS_ENV = "OUTERBOOK_CORPUS"


def _read_graph(path: str, edge_list: bool = False) -> GraphDocument:
    text = sys.stdin.read() if path == "-" else Path(path).read_text()
    return parse_edge_list(text) if edge_list else parse_graph_document(text)


def _write(path: str | None, text: str) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        Path(path).write_text(text)


def _report_json(report) -> str:
    return json.dumps(
        {
            "ok": report.ok,
            "pages_used": report.pages_used,
            "delta": report.delta,
            "dispersable": report.dispersable,
            "empty_pages": list(report.empty_pages),
            "violations": [
                {"kind": v.kind, "page": v.page, "vertex": v.vertex, "edges": [list(e) for e in v.edges]}
                for v in report.violations
            ],
        },
        indent=2,
        sort_keys=True,
    )


def cmd_embed(args) -> int:
    doc = _read_graph(args.graph, args.edge_list)
    emb = embed_general(doc.graph)
    report = verify(doc.graph, emb)
    if not report.ok:
        raise InvariantError(f"constructed certificate fails verification: {report.violations[0]}")
    _write(args.output, serialize_certificate(emb))
    if args.render:
        Path(args.render).write_text(render_svg(doc.graph, emb, style=args.style, labels=doc.labels))
    print(
        f"pages={report.pages_used} delta={report.delta} dispersable={str(report.dispersable).lower()}",
        file=sys.stderr,
    )
    return 0


def cmd_verify(args) -> int:
    doc = _read_graph(args.graph, args.edge_list)
    emb = parse_certificate(Path(args.certificate).read_text())
    report = verify(doc.graph, emb)
    if args.json:
        print(_report_json(report))
    else:
        status = "ok" if report.ok else "INVALID"
        print(f"{status} pages_used={report.pages_used} delta={report.delta} "
              f"dispersable={str(report.dispersable).lower()}")
        for v in report.violations:
            where = [] if v.page is None else [f"page {v.page}"]
            if v.vertex is not None:
                where.append(f"vertex {v.vertex}")
            print(f"  {v.kind}: {', '.join(where + [str(e) for e in v.edges])}")
        if report.empty_pages:
            print(f"  note: empty pages {list(report.empty_pages)}")
    return 0 if report.ok else 3


def cmd_exact(args) -> int:
    g = _read_graph(args.graph, args.edge_list).graph
    if args.fixed_order:
        order = SpineOrder(tuple(range(g.n)))
        limit = args.max_pages if args.max_pages is not None else max(g.m, 1)
        for k in range(max(1, max_degree(g)), limit + 1):
            emb = exact_mbt_fixed_order(g, order, k)
            if emb is not None:
                mbt, witness = (k if g.m else 0), emb
                break
        else:
            raise Infeasible(f"no matching embedding on the label order within {limit} pages")
    else:
        result = exact_mbt(g, max_pages=args.max_pages, allow_large=args.allow_large)
        mbt, witness = result.mbt, result.witness
    print(f"mbt={mbt}")
    if args.output:
        _write(args.output, serialize_certificate(witness))
    return 0


def cmd_gen(args) -> int:
    if args.family == "maximal":
        g = gen_maximal_outerplanar(args.n, args.seed)
    elif args.family == "outerplanar":
        g = gen_biconnected_outerplanar(GenSpec("outerplanar", args.n, args.prob, args.seed))
    else:
        g = gen_family(args.family, args.n)
    _write(args.output, serialize_graph(g))
    return 0


def _bench_one(path: str) -> dict:
    try:
        g = parse_graph_document(Path(path).read_text()).graph
        start = time.perf_counter()
        emb = embed_general(g)
        report = verify(g, emb)
        elapsed = time.perf_counter() - start
        return {"graph": Path(path).name, "n": g.n, "delta": report.delta,
                "pages": report.pages_used, "ms": elapsed * 1000, "ok": report.ok}
    except OuterbookError as exc:
        return {"graph": Path(path).name, "error": str(exc), "ok": False}


def cmd_bench(args) -> int:
    corpus = args.corpus or os.environ.get(CORPUS_ENV)
    if not corpus:
        print(f"no corpus: pass --corpus or set {CORPUS_ENV}", file=sys.stderr)
        return 3
    paths = sorted(str(p) for p in Path(corpus).glob("*.graph"))
    if args.jobs > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            rows = list(pool.map(_bench_one, paths))
    else:
        rows = [_bench_one(p) for p in paths]
    print(f"{'graph':<32} {'n':>5} {'delta':>5} {'pages':>5} {'ms':>9}")
    for r in rows:
        if "error" in r:
            print(f"{r['graph']:<32} error: {r['error']}")
        else:
            flag = "" if r["ok"] else "  INVALID"
            print(f"{r['graph']:<32} {r['n']:>5} {r['delta']:>5} {r['pages']:>5} {r['ms']:>9.2f}{flag}")
    failed = sum(not r["ok"] for r in rows)
    print(f"{len(rows)} graphs, {failed} failed")
    return 0 if failed == 0 else 5


def cmd_enumerate(args) -> int:
    if args.output_dir:
        out = Path(args.output_dir)
        out.mkdir(parents=True, exist_ok=True)
        for i, g in enumerate(enumerate_biconnected_outerplanar(args.n)):
            (out / f"bo_n{args.n}_{i:05d}.graph").write_text(serialize_graph(g))
    else:
        for i, g in enumerate(enumerate_biconnected_outerplanar(args.n)):
            if i:
                sys.stdout.write("\n")
            sys.stdout.write(serialize_graph(g))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="outerbook", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def graph_arg(p):
        p.add_argument("-g", "--graph", required=True, help="graph document ('-' for stdin)")
        p.add_argument("--edge-list", action="store_true", help="read a plain 'u v' edge list")

    p = sub.add_parser("embed", help="construct and verify a certificate")
    graph_arg(p)
    p.add_argument("-o", "--output", help="certificate path (default stdout)")
    p.add_argument("--render", metavar="SVG", help="also write an arc diagram")
    p.add_argument("--style", choices=("color", "halves"), default="color")
    p.set_defaults(func=cmd_embed)

    p = sub.add_parser("verify", help="check a certificate against a graph")
    graph_arg(p)
    p.add_argument("-c", "--certificate", required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("exact", help="exhaustive matching book thickness")
    graph_arg(p)
    p.add_argument("--max-pages", type=int)
    p.add_argument("--fixed-order", action="store_true", help="search only the label order 0..n-1")
    p.add_argument("--allow-large", action="store_true", help="lift the vertex cap")
    p.add_argument("-o", "--output", help="write the witness certificate")
    p.set_defaults(func=cmd_exact)

    p = sub.add_parser("gen", help="generate a graph")
    p.add_argument("--family", required=True, choices=FAMILIES + ("maximal", "outerplanar"))
    p.add_argument("-n", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--prob", type=float, default=0.5, help="chord keep probability (outerplanar)")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("bench", help="embed and verify every *.graph in a directory")
    p.add_argument("--corpus", help=f"directory (default ${CORPUS_ENV})")
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_bench)

    p = sub.add_parser("enumerate", help="all labelled biconnected outerplanar graphs of order N")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("-o", "--output-dir", help="write one file per graph instead of stdout")
    p.set_defaults(func=cmd_enumerate)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except OuterbookError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.exit_code
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
