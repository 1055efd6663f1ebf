"""Pure-Python page-assignment search for a fixed spine order.

Mirrors ``_search.pyx`` line for line; both must return identical results.
"""

from __future__ import annotations


def prepare(position, edges):
    """Edges longest span first, plus per-edge conflict masks over earlier edges.

    Two edges conflict when they share an endpoint or interleave.
    """
    m = len(edges)
    spans = []
    for u, v in edges:
        a, b = position[u], position[v]
        spans.append((a, b) if a < b else (b, a))
    idx = sorted(range(m), key=lambda i: (spans[i][0] - spans[i][1], spans[i][0]))
    conflict = [0] * m
    for i in range(m):
        a, b = spans[idx[i]]
        mask = 0
        for j in range(i):
            c, d = spans[idx[j]]
            if a == c or a == d or b == c or b == d or a < c < b < d or c < a < d < b:
                mask |= 1 << j
        conflict[i] = mask
    return idx, conflict


def color_fixed_order(position, edges, k):
    """Backtracking page assignment with at most ``k`` pages.

    Returns ``(pages, nodes)`` where ``pages[i]`` is the page of ``edges[i]``
    (``None`` if infeasible) and ``nodes`` counts placements tried.
    Pages are opened in increasing order to skip relabelled duplicates.
    """
    m = len(edges)
    if m == 0:
        return [], 0
    if k <= 0:
        return None, 0
    idx, conflict = prepare(position, edges)
    masks = [0] * k
    assign = [-1] * m
    hi = [-1] * (m + 1)
    nxt = [0] * m
    nodes = 0
    i = 0
    while 0 <= i < m:
        limit = hi[i] + 2
        if limit > k:
            limit = k
        p = nxt[i]
        c = conflict[i]
        while p < limit and c & masks[p]:
            p += 1
        if p < limit:
            assign[i] = p
            masks[p] |= 1 << i
            nxt[i] = p + 1
            hi[i + 1] = p if p > hi[i] else hi[i]
            nodes += 1
            i += 1
            if i < m:
                nxt[i] = 0
        else:
            nxt[i] = 0
            i -= 1
            if i >= 0:
                masks[assign[i]] &= ~(1 << i)
                assign[i] = -1
    if i < 0:
        return None, nodes
    pages = [0] * m
    for pos_in_search, original in enumerate(idx):
        pages[original] = assign[pos_in_search]
    return pages, nodes
