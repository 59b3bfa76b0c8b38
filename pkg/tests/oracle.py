"""Independent brute-force oracle for acyclic edge colorings.

Deliberately self-contained: no imports from the package under test. The
enumerator walks every assignment of k colors to m edges with an odometer
(no search-tree pruning) and checks each assignment from scratch, so it
can disagree with the real solver only if one of them is wrong.
"""

from __future__ import annotations

from itertools import combinations


def is_proper(n: int, edges: list[tuple[int, int]], colors: list[int]) -> bool:
    seen: set[tuple[int, int]] = set()
    for (u, v), c in zip(edges, colors):
        if (u, c) in seen or (v, c) in seen:
            return False
        seen.add((u, c))
        seen.add((v, c))
    return True


def is_acyclic(n: int, edges: list[tuple[int, int]], colors: list[int]) -> bool:
    """No two color classes may contain a cycle (checked by union-find)."""
    used = sorted(set(colors))
    for a, b in combinations(used, 2):
        parent = list(range(n))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for (u, v), c in zip(edges, colors):
            if c != a and c != b:
                continue
            ru, rv = find(u), find(v)
            if ru == rv:
                return False
            parent[ru] = rv
    return True


def has_acyclic_coloring_exhaustive(
    n: int, edges: list[tuple[int, int]], k: int
) -> list[int] | None:
    """Try every one of the k^m assignments in odometer order."""
    m = len(edges)
    if m == 0:
        return []
    if k <= 0:
        return None
    # properness precheck per assignment, cheap fail-fast on a flat array
    colors = [1] * m
    while True:
        if is_proper(n, edges, colors) and is_acyclic(n, edges, colors):
            return list(colors)
        i = m - 1
        while i >= 0 and colors[i] == k:
            colors[i] = 1
            i -= 1
        if i < 0:
            return None
        colors[i] += 1


def acyclic_index_exhaustive(n: int, edges: list[tuple[int, int]], cap: int = 12) -> int:
    """Least k with an acyclic k-edge-coloring, by exhaustive enumeration."""
    if not edges:
        return 0
    deg: dict[int, int] = {}
    for u, v in edges:
        deg[u] = deg.get(u, 0) + 1
        deg[v] = deg.get(v, 0) + 1
    for k in range(max(deg.values()), cap + 1):
        if has_acyclic_coloring_exhaustive(n, edges, k) is not None:
            return k
    raise AssertionError(f"no acyclic coloring with <= {cap} colors")
