"""Combinatorial 1-planar drawings and their associated plane graphs.

A drawing is given combinatorially: the base graph, the set of crossing
pairs (unordered pairs of independent edges that cross once), and the
rotation system of the *planarized* graph, in which every crossing is a
degree-4 vertex. Crossing vertices are numbered n, n+1, ... in
crossing-pair order; in files they are written X0, X1, ...

Face traversal convention: from the directed edge (u, v), the walk
continues with (v, w) where w follows u in the rotation at v. Every
directed edge lies on exactly one face walk.

This module only validates drawings; constructing them (generators,
crossing insertion) lives in ``acecolor.generate``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import EmbeddingError, ParseError
from .graph import Edge, Graph, _parse_graph_lines, canonical_edge, format_graph

CrossingPair = tuple[Edge, Edge]


@dataclass(frozen=True)
class Face:
    """One face walk: the cyclic sequence of directed edges on its boundary."""

    walk: tuple[tuple[int, int], ...]

    @property
    def degree(self) -> int:
        return len(self.walk)

    @property
    def vertices(self) -> tuple[int, ...]:
        """Boundary vertices in walk order, with multiplicity."""
        return tuple(u for u, _ in self.walk)

    def __repr__(self) -> str:
        return f"Face({'-'.join(str(v) for v in self.vertices)})"


class Drawing:
    """A 1-planar drawing: base graph + crossing pairs + rotation of the
    planarized graph."""

    __slots__ = ("base", "crossing_pairs", "rotation")

    def __init__(
        self,
        base: Graph,
        crossing_pairs: list[CrossingPair] | tuple[CrossingPair, ...],
        rotation: dict[int, list[int] | tuple[int, ...]],
    ):
        self.base = base
        pairs = []
        edge_set = set(base.edges)
        crossed: set[Edge] = set()
        for e1, e2 in crossing_pairs:
            e1 = canonical_edge(*e1)
            e2 = canonical_edge(*e2)
            for e in (e1, e2):
                if e not in edge_set:
                    raise EmbeddingError(f"crossing pair names non-edge {e}")
                if e in crossed:
                    raise EmbeddingError(f"edge {e} crossed more than once")
                crossed.add(e)
            if set(e1) & set(e2):
                raise EmbeddingError(
                    f"crossing pair {e1} x {e2} shares an endpoint; such "
                    "crossings are always removable and are rejected"
                )
            pairs.append((e1, e2) if e1 < e2 else (e2, e1))
        self.crossing_pairs: tuple[CrossingPair, ...] = tuple(pairs)
        self.rotation = {v: tuple(rot) for v, rot in rotation.items()}

    @property
    def crossing_count(self) -> int:
        return len(self.crossing_pairs)

    def crossing_vertex(self, pair_index: int) -> int:
        return self.base.n + pair_index


class PlaneGraph:
    """The plane graph of a drawing: crossings are degree-4 vertices.

    Vertices 0..n_real-1 are the base vertices; n_real.. are crossings.
    ``graph`` is the planarized graph, ``segment_origin`` maps each of its
    edges back to the base edge it belongs to.
    """

    __slots__ = (
        "base",
        "n_real",
        "crossing_pairs",
        "graph",
        "rotation",
        "faces",
        "segment_origin",
        "_face_index_at",
    )

    def __init__(
        self,
        base: Graph,
        crossing_pairs: tuple[CrossingPair, ...],
        graph: Graph,
        rotation: tuple[tuple[int, ...], ...],
        faces: tuple[Face, ...],
        segment_origin: dict[Edge, Edge],
    ):
        self.base = base
        self.n_real = base.n
        self.crossing_pairs = crossing_pairs
        self.graph = graph
        self.rotation = rotation
        self.faces = faces
        self.segment_origin = segment_origin
        index: list[list[int]] = [[] for _ in range(graph.n)]
        for i, f in enumerate(faces):
            for v in f.vertices:
                index[v].append(i)
        self._face_index_at = tuple(tuple(ix) for ix in index)

    def is_crossing(self, v: int) -> bool:
        return v >= self.n_real

    def faces_at(self, v: int) -> tuple[int, ...]:
        """Indices of faces incident with v, with multiplicity."""
        self.graph.check_vertex(v)
        return self._face_index_at[v]

    def real_degree(self, v: int) -> int:
        """Degree of a real vertex in the base graph (equals its degree in
        the planarized graph)."""
        if self.is_crossing(v):
            raise ValueError(f"vertex {v} is a crossing vertex")
        return self.base.degree(v)

    def reconstructed_base_edges(self) -> set[Edge]:
        """Contract every crossing vertex back: recover the base edge set."""
        out: set[Edge] = set()
        for e in self.graph.edges:
            out.add(self.segment_origin[e])
        return out


def trace_faces(n: int, rotation: dict[int, tuple[int, ...]] | list) -> list[Face]:
    """Orbit decomposition of directed edges under the next-edge map."""
    if isinstance(rotation, dict):
        rot = [tuple(rotation.get(v, ())) for v in range(n)]
    else:
        rot = [tuple(r) for r in rotation]
    pos = [{u: i for i, u in enumerate(r)} for r in rot]
    used: set[tuple[int, int]] = set()
    faces: list[Face] = []
    for v in range(n):
        for w in rot[v]:
            if (v, w) in used:
                continue
            walk = []
            cur = (v, w)
            while cur not in used:
                used.add(cur)
                walk.append(cur)
                a, b = cur
                i = pos[b][a]
                nxt = rot[b][(i + 1) % len(rot[b])]
                cur = (b, nxt)
            faces.append(Face(tuple(walk)))
    return faces


def planarize(d: Drawing) -> PlaneGraph:
    """Build and validate the plane graph of a drawing.

    Checks: the rotation covers exactly the planarized vertex set and
    matches its edge set; the rotation at every crossing alternates the
    two crossed edges; face traversal satisfies Euler's formula on every
    connected component (genus zero).
    """
    base = d.base
    n = base.n
    n_all = n + len(d.crossing_pairs)

    crossed: dict[Edge, int] = {}
    for i, (e1, e2) in enumerate(d.crossing_pairs):
        crossed[e1] = n + i
        crossed[e2] = n + i

    # planarized edges + origin map
    segments: list[Edge] = []
    segment_origin: dict[Edge, Edge] = {}
    for e in base.edges:
        if e in crossed:
            x = crossed[e]
            for end in e:
                s = canonical_edge(end, x)
                segments.append(s)
                segment_origin[s] = e
        else:
            segments.append(e)
            segment_origin[e] = e
    try:
        pgraph = Graph(n_all, segments)
    except ValueError as exc:  # two crossings of one edge already rejected
        raise EmbeddingError(f"planarized graph malformed: {exc}") from None

    # rotation must cover exactly the planarized vertices and edges
    missing = [v for v in range(n_all) if v not in d.rotation]
    if missing:
        raise EmbeddingError(f"rotation missing for vertices {missing}")
    extra = [v for v in d.rotation if not (0 <= v < n_all)]
    if extra:
        raise EmbeddingError(f"rotation given for unknown vertices {extra}")
    rot_list: list[tuple[int, ...]] = []
    for v in range(n_all):
        r = tuple(d.rotation[v])
        if sorted(r) != sorted(pgraph.neighbors(v)):
            raise EmbeddingError(
                f"rotation at {v} is {r}, inconsistent with planarized "
                f"neighbors {pgraph.neighbors(v)}"
            )
        rot_list.append(r)

    # crossing rotations must alternate the two original edges: opposite
    # rotation slots must be the endpoints of the same crossed edge
    for i, (e1, e2) in enumerate(d.crossing_pairs):
        x = n + i
        r = rot_list[x]
        if len(r) != 4 or {r[0], r[2]} not in (set(e1), set(e2)):
            raise EmbeddingError(
                f"rotation at crossing {x} does not alternate edges "
                f"{e1} and {e2}: {r}"
            )

    faces = trace_faces(n_all, rot_list)

    # Euler's formula on every connected component (genus-zero rotation)
    comps = pgraph.connected_components()
    comp_of = {v: ci for ci, comp in enumerate(comps) for v in comp}
    edge_count = [0] * len(comps)
    for u, _v in pgraph.edges:
        edge_count[comp_of[u]] += 1
    face_count = [0] * len(comps)
    for f in faces:
        face_count[comp_of[f.walk[0][0]]] += 1
    for ci, comp in enumerate(comps):
        if edge_count[ci] == 0:
            continue  # isolated vertex
        euler = len(comp) - edge_count[ci] + face_count[ci]
        if euler != 2:
            raise EmbeddingError(
                f"rotation is not planar on component containing {comp[0]}: "
                f"V-E+F = {len(comp)}-{edge_count[ci]}+{face_count[ci]} != 2"
            )

    # crossings are never adjacent (their neighbors are base vertices)
    for i in range(len(d.crossing_pairs)):
        for w in pgraph.neighbors(n + i):
            if w >= n:
                raise EmbeddingError(f"crossing vertices {n + i} and {w} adjacent")

    return PlaneGraph(
        base=base,
        crossing_pairs=d.crossing_pairs,
        graph=pgraph,
        rotation=tuple(rot_list),
        faces=tuple(faces),
        segment_origin=segment_origin,
    )


def degree_charge_total(p: PlaneGraph) -> int:
    """Sum of (deg - 4) over all vertices and faces of the plane graph;
    equals -8 for every connected plane graph."""
    if not p.graph.is_connected():
        raise EmbeddingError("charge identity requires a connected drawing")
    vertex_part = sum(p.graph.degree(v) - 4 for v in range(p.graph.n))
    face_part = sum(f.degree - 4 for f in p.faces)
    return vertex_part + face_part


def degree_two_face_violations(p: PlaneGraph) -> list[tuple[int, int]]:
    """Real degree-2 vertices lying on a 3-face, as (vertex, face index).

    In a drawing with as few crossings as possible every 2-vertex lies
    only on faces of degree >= 4; violations signal a non-minimal drawing.
    """
    out = []
    for v in range(p.n_real):
        if p.base.degree(v) != 2:
            continue
        for fi in p.faces_at(v):
            if p.faces[fi].degree == 3:
                out.append((v, fi))
    return out


def triangle_face_budget(p: PlaneGraph, v: int) -> tuple[int, int, bool]:
    """(count, bound, ok): the number of 3-faces at a real vertex v against
    the bound floor(2(deg - deg2neighbors)/3)."""
    if p.is_crossing(v):
        raise ValueError(f"vertex {v} is a crossing vertex")
    ell = p.base.degree(v)
    lam = sum(1 for u in p.base.neighbors(v) if p.base.degree(u) == 2)
    count = sum(1 for fi in p.faces_at(v) if p.faces[fi].degree == 3)
    bound = (2 * (ell - lam)) // 3
    return count, bound, count <= bound


# -- drawing file format -------------------------------------------------------


def _vertex_token(tok: str, n: int, n_cross: int) -> int:
    if tok.startswith("X"):
        try:
            i = int(tok[1:])
        except ValueError:
            raise ParseError(f"bad crossing token {tok!r}") from None
        if not (0 <= i < n_cross):
            raise ParseError(f"crossing {tok} out of range (have {n_cross} pairs)")
        return n + i
    try:
        v = int(tok)
    except ValueError:
        raise ParseError(f"bad vertex token {tok!r}") from None
    if not (0 <= v < n):
        raise ParseError(f"vertex {v} out of range")
    return v


def parse_drawing(text: str) -> Drawing:
    """Parse the drawing format: graph section, `x a b c d` crossing lines,
    then `rot v: ...` rotation lines for every planarized vertex."""
    base, rest = _parse_graph_lines(text.splitlines(), where="drawing")
    pairs: list[CrossingPair] = []
    i = 0
    while i < len(rest) and rest[i].split()[0] == "x":
        parts = rest[i].split()
        if len(parts) != 5:
            raise ParseError(f"drawing: bad crossing line {rest[i]!r}")
        try:
            a, b, c, dd = (int(t) for t in parts[1:])
        except ValueError:
            raise ParseError(f"drawing: bad crossing line {rest[i]!r}") from None
        pairs.append(((a, b), (c, dd)))
        i += 1
    rotation: dict[int, list[int]] = {}
    n_cross = len(pairs)
    for ln in rest[i:]:
        parts = ln.split()
        if parts[0] != "rot" or len(parts) < 2 or not parts[1].endswith(":"):
            raise ParseError(f"drawing: expected 'rot v: ...', got {ln!r}")
        v = _vertex_token(parts[1][:-1], base.n, n_cross)
        if v in rotation:
            raise ParseError(f"drawing: duplicate rotation for vertex {parts[1][:-1]}")
        rotation[v] = [_vertex_token(t, base.n, n_cross) for t in parts[2:]]
    try:
        return Drawing(base, pairs, rotation)
    except EmbeddingError as exc:
        raise ParseError(f"drawing: {exc}") from None


def format_drawing(d: Drawing) -> str:
    n = d.base.n

    def tok(v: int) -> str:
        return f"X{v - n}" if v >= n else str(v)

    lines = [format_graph(d.base).rstrip("\n")]
    for (a, b), (c, dd) in d.crossing_pairs:
        lines.append(f"x {a} {b} {c} {dd}")
    for v in sorted(d.rotation):
        row = " ".join(tok(w) for w in d.rotation[v])
        lines.append(f"rot {tok(v)}: {row}")
    return "\n".join(lines) + "\n"
