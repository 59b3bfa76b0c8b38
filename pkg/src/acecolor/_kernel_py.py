"""Pure-Python search kernel for acyclic edge colorings.

Backtracks over edges in a fixed order, lowest color first, pruning
assignments that break properness or close a bichromatic cycle. Color
classes are interchangeable, so edge i may only use colors up to one more
than the largest color used on earlier edges (first-use symmetry break).

The compiled extension in ``_kernel.pyx`` implements the same algorithm;
``acecolor.kernel`` picks whichever is available at import time.
"""

from __future__ import annotations

BACKEND = "python"


def find_coloring(
    n: int,
    k: int,
    eu: list[int],
    ev: list[int],
    order: list[int],
) -> list[int] | None:
    """Search for an acyclic edge coloring with colors 1..k.

    eu/ev give edge endpoints; order is the permutation of edge indices to
    color, typically chosen so each edge touches previously colored ones.
    Returns per-edge colors aligned with eu/ev, or None if no coloring
    exists within k colors.
    """
    m = len(eu)
    if m == 0:
        return []
    if k <= 0:
        return None
    stride = k + 1
    # vcol[v*stride + c] = w+1 if vertex v has an edge of color c to w, else 0
    vcol = [0] * (n * stride)
    colors = [0] * m

    def closes_cycle(u: int, v: int, c: int) -> bool:
        # A new (c, b)-cycle through uv needs color b present at both ends;
        # walk the alternating path from u and see if it lands on v via b.
        ub = u * stride
        vb = v * stride
        for b in range(1, k + 1):
            if b == c or not vcol[ub + b] or not vcol[vb + b]:
                continue
            cur = u
            use = b
            while True:
                nxt = vcol[cur * stride + use]
                if not nxt:
                    break
                cur = nxt - 1
                if cur == v:
                    if use == b:
                        return True
                    break
                use = b if use == c else c
        return False

    def solve(i: int, maxc: int) -> bool:
        if i == m:
            return True
        e = order[i]
        u = eu[e]
        v = ev[e]
        limit = maxc + 1 if maxc + 1 < k else k
        for c in range(1, limit + 1):
            if vcol[u * stride + c] or vcol[v * stride + c]:
                continue
            if closes_cycle(u, v, c):
                continue
            colors[e] = c
            vcol[u * stride + c] = v + 1
            vcol[v * stride + c] = u + 1
            if solve(i + 1, maxc if c <= maxc else c):
                return True
            colors[e] = 0
            vcol[u * stride + c] = 0
            vcol[v * stride + c] = 0
        return False

    return list(colors) if solve(0, 0) else None
