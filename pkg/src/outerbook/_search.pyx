# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled page-assignment search for a fixed spine order (at most 64 edges)."""

from libc.stdint cimport uint64_t

from ._search_py import prepare

cdef enum:
    MAXE = 64


def color_fixed_order(position, edges, int k):
    cdef int m = len(edges)
    if m == 0:
        return [], 0
    if k <= 0:
        return None, 0
    if m > MAXE:
        raise ValueError("compiled kernel handles at most 64 edges")
    idx, conflict_list = prepare(position, edges)
    cdef uint64_t conflict[MAXE]
    cdef uint64_t masks[MAXE]
    cdef int assign[MAXE]
    cdef int hi[MAXE + 1]
    cdef int nxt[MAXE]
    cdef int i, p, limit
    cdef uint64_t c
    cdef long long nodes = 0
    for i in range(m):
        conflict[i] = <uint64_t> conflict_list[i]
        assign[i] = -1
        nxt[i] = 0
        hi[i] = -1
    hi[m] = -1
    for i in range(k if k < MAXE else MAXE):
        masks[i] = 0
    if k > MAXE:
        k = MAXE
    i = 0
    while 0 <= i < m:
        limit = hi[i] + 2
        if limit > k:
            limit = k
        p = nxt[i]
        c = conflict[i]
        while p < limit and (c & masks[p]):
            p += 1
        if p < limit:
            assign[i] = p
            masks[p] |= (<uint64_t> 1) << i
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
                masks[assign[i]] &= ~((<uint64_t> 1) << i)
                assign[i] = -1
    if i < 0:
        return None, nodes
    pages = [0] * m
    for i in range(m):
        pages[idx[i]] = assign[i]
    return pages, nodes
