# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled search kernel for acyclic edge colorings.

Same algorithm as ``_kernel_py``: backtracking over edges in a fixed
order, lowest color first, properness and bichromatic-cycle pruning, and
a first-use symmetry break on colors.
"""

from libc.stdlib cimport calloc, free

BACKEND = "cython"


cdef bint _closes_cycle(int *vcol, int stride, int u, int v, int c, int k) noexcept:
    cdef int b, cur, use, nxt
    for b in range(1, k + 1):
        if b == c or vcol[u * stride + b] == 0 or vcol[v * stride + b] == 0:
            continue
        cur = u
        use = b
        while True:
            nxt = vcol[cur * stride + use]
            if nxt == 0:
                break
            cur = nxt - 1
            if cur == v:
                if use == b:
                    return True
                break
            use = b if use == c else c
    return False


cdef bint _solve(int i, int maxc, int m, int k, int stride,
                 int *eu, int *ev, int *order, int *vcol, int *colors) noexcept:
    cdef int e, u, v, c, limit, newmax
    if i == m:
        return True
    e = order[i]
    u = eu[e]
    v = ev[e]
    limit = maxc + 1
    if limit > k:
        limit = k
    for c in range(1, limit + 1):
        if vcol[u * stride + c] or vcol[v * stride + c]:
            continue
        if _closes_cycle(vcol, stride, u, v, c, k):
            continue
        colors[e] = c
        vcol[u * stride + c] = v + 1
        vcol[v * stride + c] = u + 1
        newmax = maxc if c <= maxc else c
        if _solve(i + 1, newmax, m, k, stride, eu, ev, order, vcol, colors):
            return True
        colors[e] = 0
        vcol[u * stride + c] = 0
        vcol[v * stride + c] = 0
    return False


def find_coloring(int n, int k, eu, ev, order):
    """Mirror of ``_kernel_py.find_coloring`` (see that module for the contract)."""
    cdef int m = len(eu)
    if m == 0:
        return []
    if k <= 0:
        return None
    cdef int stride = k + 1
    # one block: eu | ev | order | colors | vcol
    cdef int *buf = <int *> calloc(4 * m + n * stride, sizeof(int))
    if buf == NULL:
        raise MemoryError()
    cdef int *c_eu = buf
    cdef int *c_ev = buf + m
    cdef int *c_order = buf + 2 * m
    cdef int *c_colors = buf + 3 * m
    cdef int *c_vcol = buf + 4 * m
    cdef int i
    cdef bint found
    try:
        for i in range(m):
            c_eu[i] = eu[i]
            c_ev[i] = ev[i]
            c_order[i] = order[i]
        found = _solve(0, 0, m, k, stride, c_eu, c_ev, c_order, c_vcol, c_colors)
        if not found:
            return None
        return [c_colors[i] for i in range(m)]
    finally:
        free(buf)
