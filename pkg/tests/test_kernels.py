import itertools
import os
import subprocess
import sys

import pytest
from hypothesis import given, settings, strategies as st

from outerbook import kernels
from outerbook._search_py import color_fixed_order as py_color

compiled = pytest.mark.skipif(kernels.c_color_fixed_order is None, reason="compiled kernel not built")


@st.composite
def instances(draw):
    n = draw(st.integers(2, 8))
    pairs = list(itertools.combinations(range(n), 2))
    edges = draw(st.lists(st.sampled_from(pairs), unique=True, min_size=0, max_size=min(len(pairs), 14)))
    order = draw(st.permutations(range(n)))
    position = {v: i for i, v in enumerate(order)}
    k = draw(st.integers(0, 6))
    return position, edges, k


def _valid(position, edges, pages, k):
    for i, j in itertools.combinations(range(len(edges)), 2):
        if pages[i] != pages[j]:
            continue
        (u, v), (x, y) = edges[i], edges[j]
        if {u, v} & {x, y}:
            return False
        a, b = sorted((position[u], position[v]))
        c, d = sorted((position[x], position[y]))
        if a < c < b < d or c < a < d < b:
            return False
    return all(0 <= p < k for p in pages)


@given(instances())
@settings(max_examples=300, deadline=None)
def test_python_kernel_results_are_valid(inst):
    position, edges, k = inst
    pages, _ = py_color(position, edges, k)
    if pages is not None:
        assert _valid(position, edges, pages, k)


@compiled
@given(instances())
@settings(max_examples=400, deadline=None)
def test_backends_agree(inst):
    position, edges, k = inst
    assert kernels.c_color_fixed_order(position, edges, k) == py_color(position, edges, k)


@compiled
def test_backends_agree_on_64_edges():
    n = 12
    edges = list(itertools.combinations(range(n), 2))[:64]
    position = {v: v for v in range(n)}
    assert kernels.c_color_fixed_order(position, edges, 11) == py_color(position, edges, 11)


def test_dispatch_falls_back_beyond_64_edges():
    n = 13
    edges = list(itertools.combinations(range(n), 2))[:70]
    position = {v: v for v in range(n)}
    pages, _ = kernels.color_fixed_order(position, edges, 70)
    assert pages is not None and _valid(position, edges, pages, 70)


def test_pure_backend_forced_by_env():
    env = dict(os.environ, OUTERBOOK_PURE="1")
    out = subprocess.run(
        [sys.executable, "-c", "from outerbook import kernels; print(kernels.BACKEND)"],
        env=env, capture_output=True, text=True, check=True,
    )
    assert out.stdout.strip() == "python"
