"""Executable structural conditions for palette-minimal graphs.

A graph whose acyclic chromatic index exceeds the palette size kappa,
while every proper subgraph colors within kappa, is *palette-minimal*
(kappa-deletion-minimal). Such graphs are known to satisfy a list of
local degree conditions; each enum member below is one of them, checkable
directly on a concrete graph (plus, for the face conditions, a drawing).
A witness is a binding of a condition's quantifiers at which it fails.

Thresholds are parameterized by the palette slack kappa - max_degree;
with the default palette kappa = max_degree + 16 they instantiate to the
familiar constants (2-vertices need 20+ neighbors, 3-vertices need 18+
neighbors, and so on). The checks assume kappa >= max_degree + 2, the
regime in which the underlying structure results hold.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .embedding import Drawing, PlaneGraph, degree_two_face_violations, planarize, triangle_face_budget
from .errors import SizeRefusal
from .graph import Graph
from .solver import has_acyclic_coloring


class Condition(Enum):
    MIN_DEGREE_2CONNECTED = "min-degree-2connected"
    DEG2_BIG_NEIGHBORS = "deg2-big-neighbors"
    DEG3_BIG_NEIGHBORS = "deg3-big-neighbors"
    TIGHT_VERTEX_SMALL_NEIGHBOR = "tight-vertex-small-neighbor"
    TWO_DEG4_NEIGHBORS = "two-deg4-neighbors"
    DEG4_NEIGHBOR_PROFILE = "deg4-neighbor-profile"
    DEG5_NEIGHBOR_PROFILE = "deg5-neighbor-profile"
    HEAVY_DEG2_SUPPORT = "heavy-deg2-support"
    DEG2_FACE_SIZES = "deg2-face-sizes"
    TRIANGLE_FACE_BUDGET = "triangle-face-budget"
    DEG2_SUPPORT_COUNTS = "deg2-support-counts"
    DEG4_DEGREE_SUM = "deg4-degree-sum"
    DEG4_DEGREE_SUM_TRIANGLES = "deg4-degree-sum-triangles"
    DEG3_TIGHT_STRUCTURE = "deg3-tight-structure"


FACE_CONDITIONS = frozenset({Condition.DEG2_FACE_SIZES, Condition.TRIANGLE_FACE_BUDGET})

# evaluation order for find_reducible_configuration: global connectivity
# first, then the numbered degree conditions, then face conditions, then
# the finer counting conditions
CONDITION_ORDER: tuple[Condition, ...] = (
    Condition.MIN_DEGREE_2CONNECTED,
    Condition.DEG2_BIG_NEIGHBORS,
    Condition.DEG3_BIG_NEIGHBORS,
    Condition.TIGHT_VERTEX_SMALL_NEIGHBOR,
    Condition.TWO_DEG4_NEIGHBORS,
    Condition.DEG4_NEIGHBOR_PROFILE,
    Condition.DEG5_NEIGHBOR_PROFILE,
    Condition.HEAVY_DEG2_SUPPORT,
    Condition.DEG2_FACE_SIZES,
    Condition.TRIANGLE_FACE_BUDGET,
    Condition.DEG2_SUPPORT_COUNTS,
    Condition.DEG3_TIGHT_STRUCTURE,
    Condition.DEG4_DEGREE_SUM,
)


@dataclass(frozen=True)
class ConditionWitness:
    condition: Condition
    vertices: tuple[int, ...]
    detail: str


def _slack_thresholds(g: Graph, kappa: int) -> tuple[int, int]:
    delta = g.max_degree() if g.n else 0
    return kappa - delta + 4, kappa - delta + 2  # thresholds for 2- and 3-vertices


def _scope(g: Graph, vertices) -> list[int]:
    return sorted(vertices) if vertices is not None else list(range(g.n))


# -- individual checks ----------------------------------------------------------


def _check_min_degree_2connected(g: Graph, kappa: int, vertices) -> list[ConditionWitness]:
    out = []
    cond = Condition.MIN_DEGREE_2CONNECTED
    scope = set(_scope(g, vertices))
    for v in sorted(scope):
        if g.degree(v) < 2:
            out.append(ConditionWitness(cond, (v,), f"vertex {v} has degree {g.degree(v)} < 2"))
    if vertices is None and g.n >= 2 and not g.is_connected():
        reps = tuple(c[0] for c in g.connected_components())
        out.append(ConditionWitness(cond, reps, "graph is disconnected"))
    for v in g.articulation_points():
        if v in scope:
            out.append(ConditionWitness(cond, (v,), f"vertex {v} is a cut vertex"))
    return out


def _check_deg2_big_neighbors(g: Graph, kappa: int, vertices) -> list[ConditionWitness]:
    big, _ = _slack_thresholds(g, kappa)
    out = []
    for v in _scope(g, vertices):
        if g.degree(v) != 2:
            continue
        have = g.count_neighbors_with_degree_at_least(v, big)
        if have < 2:
            degs = [g.degree(u) for u in g.neighbors(v)]
            out.append(
                ConditionWitness(
                    Condition.DEG2_BIG_NEIGHBORS,
                    (v,),
                    f"2-vertex {v} has neighbor degrees {degs}, needs two >= {big}",
                )
            )
    return out


def _check_deg3_big_neighbors(g: Graph, kappa: int, vertices) -> list[ConditionWitness]:
    _, big = _slack_thresholds(g, kappa)
    out = []
    for v in _scope(g, vertices):
        if g.degree(v) != 3:
            continue
        have = g.count_neighbors_with_degree_at_least(v, big)
        if have < 3:
            degs = [g.degree(u) for u in g.neighbors(v)]
            out.append(
                ConditionWitness(
                    Condition.DEG3_BIG_NEIGHBORS,
                    (v,),
                    f"3-vertex {v} has neighbor degrees {degs}, needs three >= {big}",
                )
            )
    return out


def _check_tight_vertex_small_neighbor(g: Graph, kappa: int, vertices) -> list[ConditionWitness]:
    _, tight = _slack_thresholds(g, kappa)
    out = []
    for w in _scope(g, vertices):
        if g.degree(w) != tight:
            continue
        small = [u for u in g.neighbors(w) if g.degree(u) == 3]
        if len(small) >= 2:
            out.append(
                ConditionWitness(
                    Condition.TIGHT_VERTEX_SMALL_NEIGHBOR,
                    (w,),
                    f"degree-{tight} vertex {w} has {len(small)} 3-vertex "
                    f"neighbors {small}, at most one allowed",
                )
            )
    return out


def _check_two_deg4_neighbors(g: Graph, kappa: int, vertices) -> list[ConditionWitness]:
    out = []
    for v in _scope(g, vertices):
        have = g.count_neighbors_with_degree_at_least(v, 4)
        if have < 2:
            out.append(
                ConditionWitness(
                    Condition.TWO_DEG4_NEIGHBORS,
                    (v,),
                    f"vertex {v} is adjacent to only {have} vertices of degree >= 4",
                )
            )
    return out


def _check_deg4_neighbor_profile(g: Graph, kappa: int, vertices) -> list[ConditionWitness]:
    out = []
    for v in _scope(g, vertices):
        if g.degree(v) != 4:
            continue
        degs = sorted(g.degree(u) for u in g.neighbors(v))
        all_ten = degs[0] >= 10
        small_plus_three_22 = degs[0] <= 9 and degs[1] >= 22
        if not (all_ten or small_plus_three_22):
            out.append(
                ConditionWitness(
                    Condition.DEG4_NEIGHBOR_PROFILE,
                    (v,),
                    f"4-vertex {v} has neighbor degrees {degs}; needs four "
                    "10+ or one 9- with three 22+",
                )
            )
    return out


def _check_deg5_neighbor_profile(g: Graph, kappa: int, vertices) -> list[ConditionWitness]:
    out = []
    for v in _scope(g, vertices):
        if g.degree(v) != 5:
            continue
        have = g.count_neighbors_with_degree_at_least(v, 8)
        if have < 3:
            out.append(
                ConditionWitness(
                    Condition.DEG5_NEIGHBOR_PROFILE,
                    (v,),
                    f"5-vertex {v} is adjacent to only {have} vertices of degree >= 8",
                )
            )
    return out


def _check_heavy_deg2_support(g: Graph, kappa: int, vertices) -> list[ConditionWitness]:
    delta = g.max_degree() if g.n else 0
    need_count = kappa - delta + 1
    need_degree = kappa - delta + 2
    out = []
    for v in _scope(g, vertices):
        if g.degree(v) < 10:
            continue
        if not any(g.degree(u) == 2 for u in g.neighbors(v)):
            continue
        have = g.count_neighbors_with_degree_at_least(v, need_degree)
        if have < need_count:
            out.append(
                ConditionWitness(
                    Condition.HEAVY_DEG2_SUPPORT,
                    (v,),
                    f"vertex {v} (degree {g.degree(v)}, has a 2-neighbor) is "
                    f"adjacent to {have} vertices of degree >= {need_degree}, "
                    f"needs {need_count}",
                )
            )
    return out


def _check_deg2_face_sizes(g: Graph, plane: PlaneGraph, vertices) -> list[ConditionWitness]:
    scope = set(_scope(g, vertices))
    out = []
    for v, fi in degree_two_face_violations(plane):
        if v in scope:
            out.append(
                ConditionWitness(
                    Condition.DEG2_FACE_SIZES,
                    (v,),
                    f"2-vertex {v} lies on 3-face {plane.faces[fi].vertices}",
                )
            )
    return out


def _check_triangle_face_budget(g: Graph, plane: PlaneGraph, vertices) -> list[ConditionWitness]:
    out = []
    for v in _scope(g, vertices):
        count, bound, ok = triangle_face_budget(plane, v)
        if not ok:
            out.append(
                ConditionWitness(
                    Condition.TRIANGLE_FACE_BUDGET,
                    (v,),
                    f"vertex {v} lies on {count} 3-faces, budget {bound}",
                )
            )
    return out


def _check_deg2_support_counts(g: Graph, kappa: int, vertices) -> list[ConditionWitness]:
    """Counting conditions at the neighbors of every 2-vertex, with the
    two conditional refinements for adjacent supports and for supports
    with the minimum count."""
    delta = g.max_degree() if g.n else 0
    scope = set(_scope(g, vertices))
    out = []
    cond = Condition.DEG2_SUPPORT_COUNTS
    for v0 in range(g.n):
        if g.degree(v0) != 2:
            continue
        w, v = g.neighbors(v0)
        for a, b in ((w, v), (v, w)):
            # b must support the 2-vertex: many neighbors of high degree
            if b not in scope:
                continue
            need_degree = kappa - g.degree(b) + 2
            need_count = kappa - g.degree(a) + 1
            have = g.count_neighbors_with_degree_at_least(b, need_degree)
            if have < need_count:
                out.append(
                    ConditionWitness(
                        cond,
                        (b,),
                        f"support {b} of 2-vertex {v0}: {have} neighbors of "
                        f"degree >= {need_degree}, needs {need_count}",
                    )
                )
            if kappa >= g.degree(b) + 1 and g.has_edge(a, b):
                if have < kappa - g.degree(a) + 2:
                    out.append(
                        ConditionWitness(
                            cond,
                            (b,),
                            f"adjacent supports: {b} has {have} neighbors of "
                            f"degree >= {need_degree}, needs {kappa - g.degree(a) + 2}",
                        )
                    )
                if g.degree(b) < kappa - g.degree(a) + 3:
                    out.append(
                        ConditionWitness(
                            cond,
                            (b,),
                            f"adjacent supports: deg({b}) = {g.degree(b)} < "
                            f"{kappa - g.degree(a) + 3}",
                        )
                    )
            if kappa >= delta + 2:
                strong = g.count_neighbors_with_degree_at_least(b, kappa - delta + 2)
                if strong == kappa - delta + 1:
                    deg2 = sum(1 for u in g.neighbors(b) if g.degree(u) == 2)
                    max_deg2 = g.degree(b) + delta - kappa - 3
                    if deg2 > max_deg2:
                        out.append(
                            ConditionWitness(
                                cond,
                                (b,),
                                f"support {b} with exactly {strong} strong "
                                f"neighbors has {deg2} 2-neighbors, max {max_deg2}",
                            )
                        )
                    if g.degree(b) < kappa - delta + 4:
                        out.append(
                            ConditionWitness(
                                cond,
                                (b,),
                                f"support {b} with exactly {strong} strong "
                                f"neighbors has degree {g.degree(b)} < {kappa - delta + 4}",
                            )
                        )
    # deduplicate identical witnesses from the two orderings
    return sorted(set(out), key=lambda w: (w.vertices, w.detail))


def _triangles_through(g: Graph, u: int, v: int) -> list[int]:
    return sorted(set(g.neighbors(u)) & set(g.neighbors(v)))


def _check_deg4_degree_sum(g: Graph, kappa: int, vertices) -> list[ConditionWitness]:
    delta = g.max_degree() if g.n else 0
    out = []
    for w0 in _scope(g, vertices):
        if g.degree(w0) != 4:
            continue
        total = sum(g.degree(x) for x in g.neighbors(w0))
        for w in g.neighbors(w0):
            if g.degree(w) <= kappa - delta and total < 2 * kappa + 4:
                out.append(
                    ConditionWitness(
                        Condition.DEG4_DEGREE_SUM,
                        (w0,),
                        f"4-vertex {w0} with light neighbor {w}: neighbor "
                        f"degree sum {total} < {2 * kappa + 4}",
                    )
                )
                break
    return out


def _check_deg4_degree_sum_triangles(g: Graph, kappa: int, vertices) -> list[ConditionWitness]:
    delta = g.max_degree() if g.n else 0
    out = []
    for w0 in _scope(g, vertices):
        if g.degree(w0) != 4:
            continue
        total = sum(g.degree(x) for x in g.neighbors(w0))
        for w in g.neighbors(w0):
            if g.degree(w) > kappa - delta + 1:
                continue
            if len(_triangles_through(g, w, w0)) < 2:
                continue
            if total < 2 * kappa + 5:
                out.append(
                    ConditionWitness(
                        Condition.DEG4_DEGREE_SUM_TRIANGLES,
                        (w0,),
                        f"4-vertex {w0}, edge to {w} in two triangles: sum "
                        f"{total} < {2 * kappa + 5}",
                    )
                )
            elif total == 2 * kappa + 5:
                weak = [
                    x for x in g.neighbors(w) if x != w0 and g.degree(x) < 6
                ]
                if weak:
                    out.append(
                        ConditionWitness(
                            Condition.DEG4_DEGREE_SUM_TRIANGLES,
                            (w0,),
                            f"equality case at {w0}: other neighbors of {w} "
                            f"must all have degree >= 6, but {weak} do not",
                        )
                    )
    return out


def _check_deg3_tight_structure(g: Graph, kappa: int, vertices) -> list[ConditionWitness]:
    """Structure around a 3-vertex with a neighbor of the threshold degree
    kappa - max_degree + 2, via its degree consequences only."""
    delta = g.max_degree() if g.n else 0
    tight = kappa - delta + 2
    out = []
    cond = Condition.DEG3_TIGHT_STRUCTURE
    for v in _scope(g, vertices):
        if g.degree(v) != 3:
            continue
        for w in g.neighbors(v):
            if g.degree(w) != tight:
                continue
            if _triangles_through(g, w, v):
                out.append(
                    ConditionWitness(
                        cond, (v, w), f"edge ({w}, {v}) lies in a triangle"
                    )
                )
                continue
            others = [x for x in g.neighbors(v) if x != w]
            ok = False
            for v1, v2 in ((others[0], others[1]), (others[1], others[0])):
                if g.degree(v1) != delta:
                    continue
                if not (delta >= g.degree(v2) >= kappa - delta + 3):
                    continue
                if g.count_neighbors_with_degree_at_least(v1, tight) < kappa - g.degree(v2) + 1:
                    continue
                if (
                    g.count_neighbors_with_degree_at_least(v2, kappa - g.degree(v2) + 2)
                    < kappa - delta
                ):
                    continue
                if g.count_neighbors_with_degree_at_least(v2, 4) < kappa - delta + 1:
                    continue
                ok = True
                break
            if not ok:
                out.append(
                    ConditionWitness(
                        cond,
                        (v, w),
                        f"3-vertex {v} with threshold neighbor {w}: no labeling "
                        f"of the other neighbors {others} meets the degree "
                        "and counting requirements",
                    )
                )
    return out


_GRAPH_CHECKS = {
    Condition.MIN_DEGREE_2CONNECTED: _check_min_degree_2connected,
    Condition.DEG2_BIG_NEIGHBORS: _check_deg2_big_neighbors,
    Condition.DEG3_BIG_NEIGHBORS: _check_deg3_big_neighbors,
    Condition.TIGHT_VERTEX_SMALL_NEIGHBOR: _check_tight_vertex_small_neighbor,
    Condition.TWO_DEG4_NEIGHBORS: _check_two_deg4_neighbors,
    Condition.DEG4_NEIGHBOR_PROFILE: _check_deg4_neighbor_profile,
    Condition.DEG5_NEIGHBOR_PROFILE: _check_deg5_neighbor_profile,
    Condition.HEAVY_DEG2_SUPPORT: _check_heavy_deg2_support,
    Condition.DEG2_SUPPORT_COUNTS: _check_deg2_support_counts,
    Condition.DEG4_DEGREE_SUM: _check_deg4_degree_sum,
    Condition.DEG4_DEGREE_SUM_TRIANGLES: _check_deg4_degree_sum_triangles,
    Condition.DEG3_TIGHT_STRUCTURE: _check_deg3_tight_structure,
}

_FACE_CHECKS = {
    Condition.DEG2_FACE_SIZES: _check_deg2_face_sizes,
    Condition.TRIANGLE_FACE_BUDGET: _check_triangle_face_budget,
}


def _resolve_plane(drawing) -> PlaneGraph | None:
    if drawing is None:
        return None
    if isinstance(drawing, PlaneGraph):
        return drawing
    if isinstance(drawing, Drawing):
        return planarize(drawing)
    raise TypeError(f"expected Drawing or PlaneGraph, got {type(drawing)!r}")


def check_condition(
    g: Graph,
    drawing,
    kappa: int,
    condition: Condition,
    vertices=None,
) -> list[ConditionWitness]:
    """All witnesses violating one condition; empty means it holds.

    `drawing` (a Drawing or PlaneGraph) is required for the two face
    conditions and ignored otherwise. `vertices` restricts the bindings
    examined, which the discharging audit uses for per-element blame.
    """
    if condition in FACE_CONDITIONS:
        plane = _resolve_plane(drawing)
        if plane is None:
            raise ValueError(f"{condition.value} requires a drawing")
        return _FACE_CHECKS[condition](g, plane, vertices)
    return _GRAPH_CHECKS[condition](g, kappa, vertices)


def find_reducible_configuration(
    g: Graph, drawing, kappa: int
) -> ConditionWitness | None:
    """First witness over all conditions in CONDITION_ORDER, or None.

    For a triangle-free 1-planar graph with the default palette this must
    never return None; a None result flags a bug (or a counterexample to
    the underlying structure theory) and callers treat it as an error.
    """
    ok, witness = g.is_triangle_free()
    if not ok:
        raise ValueError(f"graph contains triangle {witness}; outside the scope")
    plane = _resolve_plane(drawing)
    for cond in CONDITION_ORDER:
        if cond in FACE_CONDITIONS:
            found = check_condition(g, plane, kappa, cond)
        else:
            found = check_condition(g, None, kappa, cond)
        if found:
            return found[0]
    return None


def recheck_witness(g: Graph, drawing, kappa: int, w: ConditionWitness) -> bool:
    """Re-evaluate the witness's condition restricted to its vertices and
    confirm the same violation reappears."""
    found = check_condition(g, drawing, kappa, w.condition, vertices=w.vertices)
    return any(x.vertices == w.vertices for x in found)


def deletion_minimal_probe(g: Graph, kappa: int) -> tuple[bool, dict]:
    """Exhaustively test palette-minimality on a tiny graph.

    True iff g itself does not color within kappa but every single-edge
    deletion does (subgraph monotonicity reduces all proper subgraphs to
    edge deletions; isolated vertices rule minimality out immediately).
    """
    if not (g.m <= 16 or g.n <= 8):
        raise SizeRefusal(
            f"graph with n={g.n}, m={g.m} too large for the exhaustive probe"
        )
    detail: dict = {"kappa": kappa}
    if any(g.degree(v) == 0 for v in range(g.n)):
        detail["isolated_vertices"] = [v for v in range(g.n) if g.degree(v) == 0]
        return False, detail
    whole = has_acyclic_coloring(g, kappa)
    detail["colorable_with_kappa"] = whole is not None
    if whole is not None:
        return False, detail
    failing = []
    for e in g.edges:
        if has_acyclic_coloring(g.without_edge(*e), kappa) is None:
            failing.append(e)
    detail["uncolorable_deletions"] = failing
    return not failing, detail
