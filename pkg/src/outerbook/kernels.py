"""Backend selection for the oracle's inner search.

The compiled extension is used when it was built; set ``OUTERBOOK_PURE=1``
to force the pure-Python path.
"""

from __future__ import annotations

import os

from . import _search_py

py_color_fixed_order = _search_py.color_fixed_order

try:
    if os.environ.get("OUTERBOOK_PURE"):
        raise ImportError("pure backend requested")
    from ._search import color_fixed_order as c_color_fixed_order
except ImportError:
    c_color_fixed_order = None

BACKEND = "cython" if c_color_fixed_order is not None else "python"


def color_fixed_order(position, edges, k):
    if c_color_fixed_order is not None and len(edges) <= 64:
        return c_color_fixed_order(position, edges, k)
    return py_color_fixed_order(position, edges, k)
