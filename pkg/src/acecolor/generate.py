"""Construction of triangle-free 1-planar drawings.

The builder starts from a plane rotation system (grid quadrangulations,
cycles, the cube), optionally subdivides edges, and then inserts crossing
chords. One insertion picks an uncrossed edge (a, b) whose two flanking
faces are distinct, and joins the far corners of those faces: with f1 the
face walking a->b and f2 the face walking b->a, the chord runs from p
(the vertex after b on f1) to r (the vertex after a on f2), crossing ab.
The insertion splits each flanking face into a 3-face and a face of the
original degree, so Euler's formula is preserved by construction.

Everything here is seed-deterministic; the embedding module re-validates
every emitted drawing.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from .embedding import Drawing, Face, planarize, trace_faces
from .errors import EmbeddingError
from .graph import Edge, Graph, canonical_edge


class DrawingBuilder:
    """Mutable drawing under construction.

    Planar mutations (subdivision) are only allowed before the first
    crossing insertion, because crossing vertex ids are anchored to the
    final base vertex count.
    """

    def __init__(self, n: int, edges: list[Edge], rotation: dict[int, list[int]]):
        self.n = n
        self.edges: set[Edge] = {canonical_edge(*e) for e in edges}
        self.rotation: dict[int, list[int]] = {v: list(r) for v, r in rotation.items()}
        self.pairs: list[tuple[Edge, Edge]] = []
        self.crossed: set[Edge] = set()

    # -- planar phase ---------------------------------------------------------

    def subdivide(self, u: int, v: int) -> int:
        """Replace edge uv by a path u-w-v through a new vertex w."""
        if self.pairs:
            raise ValueError("cannot subdivide after crossings were inserted")
        e = canonical_edge(u, v)
        if e not in self.edges:
            raise ValueError(f"edge {e} not present")
        w = self.n
        self.n += 1
        self.edges.remove(e)
        self.edges.add(canonical_edge(u, w))
        self.edges.add(canonical_edge(v, w))
        self.rotation[w] = [u, v]
        self.rotation[u][self.rotation[u].index(v)] = w
        self.rotation[v][self.rotation[v].index(u)] = w
        return w

    # -- crossing phase -------------------------------------------------------

    def _vertex_count(self) -> int:
        return self.n + len(self.pairs)

    def faces(self) -> list[Face]:
        rot = {v: tuple(r) for v, r in self.rotation.items()}
        return trace_faces(self._vertex_count(), rot)

    def degree(self, v: int) -> int:
        return sum(1 for e in self.edges if v in e)

    def _abstract_adjacency(self) -> dict[int, set[int]]:
        adj: dict[int, set[int]] = {v: set() for v in range(self.n)}
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        return adj

    def insertion_corners(self, a: int, b: int) -> tuple[int, int] | None:
        """Chord corners for crossing edge (a, b), or None if the edge has
        no two distinct flanking faces."""
        f1 = f2 = None
        for f in self.faces():
            if (a, b) in f.walk:
                f1 = f
            if (b, a) in f.walk:
                f2 = f
        if f1 is None or f2 is None or f1 == f2:
            return None
        i = f1.walk.index((a, b))
        p = f1.walk[(i + 1) % len(f1.walk)][1]
        j = f2.walk.index((b, a))
        r = f2.walk[(j + 1) % len(f2.walk)][1]
        return p, r

    def can_insert_crossing(
        self, a: int, b: int, triangle_filter: bool = True, protect_deg2: bool = True
    ) -> bool:
        e = canonical_edge(a, b)
        if e not in self.edges or e in self.crossed:
            return False
        if protect_deg2 and (self.degree(a) < 3 or self.degree(b) < 3):
            # the new 3-faces contain a and b; keep 2-vertices off 3-faces
            return False
        corners = self.insertion_corners(a, b)
        if corners is None:
            return False
        p, r = corners
        if p >= self.n or r >= self.n:  # chord must join real vertices
            return False
        if p == r or p in (a, b) or r in (a, b):
            return False
        if canonical_edge(p, r) in self.edges:
            return False
        if triangle_filter:
            adj = self._abstract_adjacency()
            if adj[p] & adj[r]:
                return False
        return True

    def insert_crossing(
        self, a: int, b: int, triangle_filter: bool = True, protect_deg2: bool = True
    ) -> int:
        """Insert a chord crossing edge (a, b); returns the crossing vertex id."""
        if not self.can_insert_crossing(a, b, triangle_filter, protect_deg2):
            raise EmbeddingError(f"cannot insert a crossing over edge ({a}, {b})")
        p, r = self.insertion_corners(a, b)
        x = self._vertex_count()
        chord = canonical_edge(p, r)
        self.edges.add(chord)
        self.pairs.append((canonical_edge(a, b), chord))
        self.crossed.add(canonical_edge(a, b))
        self.crossed.add(chord)
        rot = self.rotation
        rot[a][rot[a].index(b)] = x
        rot[b][rot[b].index(a)] = x
        rot[p].insert(rot[p].index(b) + 1, x)
        rot[r].insert(rot[r].index(a) + 1, x)
        rot[x] = [p, b, r, a]
        return x

    # -- finish ----------------------------------------------------------------

    def to_drawing(self) -> Drawing:
        base = Graph(self.n, sorted(self.edges))
        return Drawing(base, list(self.pairs), self.rotation)


# -- seed shapes ----------------------------------------------------------------


def grid_builder(rows: int, cols: int) -> DrawingBuilder:
    """Plane quadrangulation: the rows x cols grid with its standard
    embedding (neighbors in up, right, down, left order)."""
    if rows < 2 or cols < 2:
        raise ValueError("grid needs at least 2 rows and 2 columns")

    def vid(r: int, c: int) -> int:
        return r * cols + c

    edges = []
    rotation: dict[int, list[int]] = {}
    for r in range(rows):
        for c in range(cols):
            if c + 1 < cols:
                edges.append((vid(r, c), vid(r, c + 1)))
            if r + 1 < rows:
                edges.append((vid(r, c), vid(r + 1, c)))
            rot = []
            if r > 0:
                rot.append(vid(r - 1, c))
            if c + 1 < cols:
                rot.append(vid(r, c + 1))
            if r + 1 < rows:
                rot.append(vid(r + 1, c))
            if c > 0:
                rot.append(vid(r, c - 1))
            rotation[vid(r, c)] = rot
    return DrawingBuilder(rows * cols, edges, rotation)


def cycle_builder(n: int) -> DrawingBuilder:
    if n < 3:
        raise ValueError("cycle needs at least 3 vertices")
    edges = [(i, (i + 1) % n) for i in range(n)]
    rotation = {i: [(i - 1) % n, (i + 1) % n] for i in range(n)}
    return DrawingBuilder(n, edges, rotation)


def cube_builder() -> DrawingBuilder:
    """The 3-cube with outer square 0-3 and inner square 4-7."""
    edges = [
        (0, 1), (1, 2), (2, 3), (3, 0),
        (4, 5), (5, 6), (6, 7), (7, 4),
        (0, 4), (1, 5), (2, 6), (3, 7),
    ]
    rotation = {
        0: [1, 4, 3],
        1: [2, 5, 0],
        2: [3, 6, 1],
        3: [2, 0, 7],
        4: [5, 7, 0],
        5: [6, 4, 1],
        6: [2, 7, 5],
        7: [6, 3, 4],
    }
    return DrawingBuilder(8, edges, rotation)


# -- corpus generation ------------------------------------------------------------

FAMILIES = ("subdivided-quadrangulation", "grid-with-crossings", "named")


@dataclass(frozen=True)
class CorpusSpec:
    count: int
    n_min: int = 10
    n_max: int = 60
    families: tuple[str, ...] = FAMILIES
    seed: int = 0


@dataclass
class GenerationReport:
    produced: list[str] = field(default_factory=list)
    skipped: list[str] = field(default_factory=list)


def _grid_dims(rng: random.Random, n_min: int, n_max: int, slack: int = 0) -> tuple[int, int]:
    dims = [
        (r, c)
        for r in range(2, 9)
        for c in range(2, 11)
        if n_min <= r * c and r * c + slack <= n_max
    ]
    if not dims:
        raise ValueError(f"no grid fits in [{n_min}, {n_max}] with slack {slack}")
    return rng.choice(dims)


def _subdivide_random(builder: DrawingBuilder, rng: random.Random, count: int) -> None:
    for _ in range(count):
        candidates = sorted(builder.edges)
        u, v = rng.choice(candidates)
        builder.subdivide(u, v)


def _insert_random_crossings(
    builder: DrawingBuilder, rng: random.Random, count: int, cap: int = 100
) -> int:
    """Insert up to `count` crossings; gives up on an edge after `cap`
    failed candidate draws. Returns the number actually inserted."""
    inserted = 0
    attempts = 0
    while inserted < count and attempts < cap:
        candidates = sorted(builder.edges - builder.crossed)
        if not candidates:
            break
        a, b = rng.choice(candidates)
        attempts += 1
        if builder.can_insert_crossing(a, b):
            builder.insert_crossing(a, b)
            inserted += 1
    return inserted


def generate_instance(family: str, seed: int, n_min: int = 10, n_max: int = 60) -> Drawing:
    """One seed-deterministic instance of the given family; always
    triangle-free and validated by planarize before being returned."""
    rng = random.Random(f"{family}:{seed}:{n_min}:{n_max}")
    if family == "subdivided-quadrangulation":
        subs = rng.randint(0, 8)
        rows, cols = _grid_dims(rng, max(n_min - subs, 4), n_max, slack=subs)
        builder = grid_builder(rows, cols)
        _subdivide_random(builder, rng, subs)
    elif family == "grid-with-crossings":
        rows, cols = _grid_dims(rng, n_min, n_max)
        builder = grid_builder(rows, cols)
        want = rng.randint(1, 4)
        _insert_random_crossings(builder, rng, want)
    elif family == "named":
        kind = rng.choice(["cycle", "subdivided-cube"])
        if kind == "cycle":
            builder = cycle_builder(rng.randint(max(n_min, 4), n_max))
        else:
            builder = cube_builder()
            subs = rng.randint(max(n_min - 8, 2), min(12, n_max - 8))
            _subdivide_random(builder, rng, subs)
    else:
        raise ValueError(f"unknown family {family!r}; choose from {FAMILIES}")
    drawing = builder.to_drawing()
    ok, witness = drawing.base.is_triangle_free()
    if not ok:  # unreachable: insertions are triangle-filtered
        raise EmbeddingError(f"generated instance has triangle {witness}")
    planarize(drawing)  # validation only
    return drawing


def generate_corpus(spec: CorpusSpec) -> list[tuple[str, Drawing]]:
    out = []
    for i in range(spec.count):
        family = spec.families[i % len(spec.families)]
        name = f"{family}-{spec.seed + i:04d}"
        out.append((name, generate_instance(family, spec.seed + i, spec.n_min, spec.n_max)))
    return out
