"""Compare the compiled and pure-Python fixed-order search kernels.

Usage: python benchmarks/bench_kernels.py [--repeat N]

Each case replays the oracle's infeasibility proof: every canonical spine
order is searched at one page below the optimum, so both kernels explore
the whole tree and must report identical node counts.
"""

import argparse
import sys
import time

from outerbook import kernels
from outerbook.generators import gen_family, gen_maximal_outerplanar
from outerbook.graph import Graph, max_degree
from outerbook.oracle import canonical_orders


def complete(n: int) -> Graph:
    return Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def cases():
    yield "C9, 2 pages", gen_family("cycle", 9), 2
    yield "K7, 6 pages", complete(7), 6
    for seed in (2, 4):
        g = gen_maximal_outerplanar(9, seed)
        yield f"maximal n=9 seed {seed}, {max_degree(g) - 1} pages", g, max_degree(g) - 1


def run(kernel, g: Graph, k: int) -> tuple[int, int]:
    edges = list(g.edges)
    found = nodes = 0
    for order in canonical_orders(g.n):
        pages, expanded = kernel(order.position, edges, k)
        found += pages is not None
        nodes += expanded
    return found, nodes


def timed(kernel, g, k, repeat):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        result = run(kernel, g, k)
        best = min(best, time.perf_counter() - t0)
    return result, best


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args(argv)
    compiled = kernels.c_color_fixed_order
    if compiled is None:
        print("compiled kernel not built; timing the Python kernel only", file=sys.stderr)
    print(f"{'case':<30}{'nodes':>10}{'python s':>10}{'cython s':>10}{'speedup':>9}")
    for name, g, k in cases():
        (found, nodes), t_py = timed(kernels.py_color_fixed_order, g, k, args.repeat)
        if compiled is None:
            print(f"{name:<30}{nodes:>10}{t_py:>10.3f}{'-':>10}{'-':>9}")
            continue
        result, t_c = timed(compiled, g, k, args.repeat)
        if result != (found, nodes):
            print(f"{name}: kernels disagree {result} vs {(found, nodes)}", file=sys.stderr)
            return 1
        print(f"{name:<30}{nodes:>10}{t_py:>10.3f}{t_c:>10.3f}{t_py / t_c:>8.1f}x")
    return 0


if __name__ == "__main__":
    sys.exit(main())
