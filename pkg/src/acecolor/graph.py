"""Simple undirected graphs with dense integer vertex ids.

Vertices are 0..n-1 and edges are stored canonically as (min, max) pairs,
so every iteration over a graph is deterministic. Graphs are immutable
after construction; removing an edge produces a new graph.
"""

from __future__ import annotations

from collections import Counter
from collections.abc import Iterable

from .errors import ParseError

Edge = tuple[int, int]


def canonical_edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


class Graph:
    __slots__ = ("n", "edges", "adj")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]]):
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        self.n = n
        seen: set[Edge] = set()
        canon: list[Edge] = []
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            e = canonical_edge(u, v)
            if e in seen:
                raise ValueError(f"duplicate edge {e}")
            seen.add(e)
            canon.append(e)
        self.edges: tuple[Edge, ...] = tuple(sorted(canon))
        adj: list[list[int]] = [[] for _ in range(n)]
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        self.adj: tuple[tuple[int, ...], ...] = tuple(tuple(sorted(a)) for a in adj)

    @property
    def m(self) -> int:
        return len(self.edges)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Graph) and self.n == other.n and self.edges == other.edges
        )

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"

    def check_vertex(self, v: int) -> None:
        if not (0 <= v < self.n):
            raise ValueError(f"vertex {v} outside 0..{self.n - 1}")

    def degree(self, v: int) -> int:
        self.check_vertex(v)
        return len(self.adj[v])

    def neighbors(self, v: int) -> tuple[int, ...]:
        self.check_vertex(v)
        return self.adj[v]

    def has_edge(self, u: int, v: int) -> bool:
        self.check_vertex(u)
        self.check_vertex(v)
        return v in self.adj[u]

    def max_degree(self) -> int:
        if self.n == 0:
            raise ValueError("max degree of an empty graph is undefined")
        return max(len(a) for a in self.adj)

    def min_degree(self) -> int:
        if self.n == 0:
            raise ValueError("min degree of an empty graph is undefined")
        return min(len(a) for a in self.adj)

    def without_edge(self, u: int, v: int) -> "Graph":
        """New graph with edge uv removed (vertex set unchanged)."""
        e = canonical_edge(u, v)
        if e not in set(self.edges):
            raise ValueError(f"edge {e} not in graph")
        return Graph(self.n, [f for f in self.edges if f != e])

    def count_neighbors_with_degree_at_least(self, v: int, d: int) -> int:
        self.check_vertex(v)
        return sum(1 for u in self.adj[v] if len(self.adj[u]) >= d)

    def is_triangle_free(self) -> tuple[bool, tuple[int, int, int] | None]:
        """Return (True, None) or (False, witness triangle)."""
        adj_sets = [set(a) for a in self.adj]
        for u, v in self.edges:
            common = adj_sets[u] & adj_sets[v]
            if common:
                w = min(common)
                return False, tuple(sorted((u, v, w)))  # type: ignore[return-value]
        return True, None

    def connected_components(self) -> list[list[int]]:
        seen = [False] * self.n
        comps: list[list[int]] = []
        for s in range(self.n):
            if seen[s]:
                continue
            stack = [s]
            seen[s] = True
            comp = []
            while stack:
                x = stack.pop()
                comp.append(x)
                for y in self.adj[x]:
                    if not seen[y]:
                        seen[y] = True
                        stack.append(y)
            comps.append(sorted(comp))
        return comps

    def is_connected(self) -> bool:
        if self.n <= 1:
            return True
        return len(self.connected_components()) == 1

    def articulation_points(self) -> list[int]:
        """Cut vertices, via the standard DFS low-point computation."""
        disc = [-1] * self.n
        low = [0] * self.n
        points: set[int] = set()
        timer = 0
        for root in range(self.n):
            if disc[root] != -1:
                continue
            # iterative DFS; stack holds (vertex, parent, neighbor index)
            stack = [(root, -1, 0)]
            disc[root] = low[root] = timer
            timer += 1
            root_children = 0
            while stack:
                v, parent, i = stack.pop()
                if i < len(self.adj[v]):
                    stack.append((v, parent, i + 1))
                    w = self.adj[v][i]
                    if disc[w] == -1:
                        disc[w] = low[w] = timer
                        timer += 1
                        if v == root:
                            root_children += 1
                        stack.append((w, v, 0))
                    elif w != parent:
                        low[v] = min(low[v], disc[w])
                else:
                    if parent != -1:
                        low[parent] = min(low[parent], low[v])
                        if parent != root and low[v] >= disc[parent]:
                            points.add(parent)
            if root_children >= 2:
                points.add(root)
        return sorted(points)


class Multiset(Counter):
    """Multiset of hashable elements; multiplicities are always >= 1."""

    def __init__(self, items: Iterable | None = None):
        super().__init__()
        if items is None:
            return
        if isinstance(items, dict):
            for x, k in items.items():
                if k < 1:
                    raise ValueError(f"multiplicity of {x!r} must be >= 1, got {k}")
                self[x] = k
        else:
            for x in items:
                self[x] += 1

    def mul(self, x) -> int:
        """Multiplicity of x; 0 for absent elements."""
        return self.get(x, 0)


def multiset_union(s: Multiset, t: Multiset) -> Multiset:
    """Additive union: output multiplicity is the sum of input multiplicities."""
    out = Multiset()
    for x, k in s.items():
        out[x] += k
    for x, k in t.items():
        out[x] += k
    return out


def _parse_graph_lines(lines: list[str], where: str = "graph") -> tuple[Graph, list[str]]:
    """Parse the `n m` header and m edge lines; return (graph, remaining lines)."""
    rows = [ln for ln in lines if ln.strip()]
    if not rows:
        raise ParseError(f"{where}: empty input")
    head = rows[0].split()
    if len(head) != 2:
        raise ParseError(f"{where}: header must be 'n m', got {rows[0]!r}")
    try:
        n, m = int(head[0]), int(head[1])
    except ValueError:
        raise ParseError(f"{where}: non-integer header {rows[0]!r}") from None
    if len(rows) < 1 + m:
        raise ParseError(f"{where}: expected {m} edge lines, found {len(rows) - 1}")
    edges = []
    for ln in rows[1 : 1 + m]:
        parts = ln.split()
        if len(parts) != 2:
            raise ParseError(f"{where}: bad edge line {ln!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise ParseError(f"{where}: non-integer edge line {ln!r}") from None
        edges.append((u, v))
    try:
        g = Graph(n, edges)
    except ValueError as exc:
        raise ParseError(f"{where}: {exc}") from None
    return g, rows[1 + m :]


def parse_graph(text: str) -> Graph:
    """Parse the text edge-list format: `n m` then m lines `u v` (0-based)."""
    g, rest = _parse_graph_lines(text.splitlines())
    if rest:
        raise ParseError(f"unexpected trailing line {rest[0]!r}")
    return g


def format_graph(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"
