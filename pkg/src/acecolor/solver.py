"""Exact and heuristic acyclic edge coloring solvers.

The exact solver is a backtracking search (see ``acecolor.kernel``) meant
for desk-scale instances. The heuristic colors edges one at a time in a
peeling-derived order, always assigning a valid color when one exists and
otherwise attempting local repairs: recoloring a single incident edge,
exchanging the colors of two edges at a shared vertex, or uncoloring a
sibling edge to free the stuck one. Every repair is gated by a
from-scratch verify, and a move budget keeps failure detectable.
"""

from __future__ import annotations

import random
from collections import deque
from dataclasses import dataclass, field

from . import kernel
from .coloring import EdgeColoring, verify
from .graph import Edge, Graph, canonical_edge

DEFAULT_SLACK = 16  # default palette is max degree plus this


@dataclass(frozen=True)
class ExactResult:
    min_colors: int
    coloring: EdgeColoring


@dataclass(frozen=True)
class Move:
    kind: str  # "recolor" | "exchange" | "uncolor-shift"
    detail: tuple


@dataclass
class SolveOutcome:
    coloring: EdgeColoring
    colors_used: int
    moves: list[Move] = field(default_factory=list)
    restarts_used: int = 0


@dataclass(frozen=True)
class RepairOutcome:
    accepted: bool
    coloring: EdgeColoring | None = None
    blocking: tuple | None = None


def edge_insertion_order(g: Graph) -> list[Edge]:
    """Peeling order: repeatedly remove an edge at a minimum-degree vertex
    (ties to the lowest vertex id). The reverse of the returned sequence is
    the coloring order, so the lightest structure is colored last."""
    deg = [g.degree(v) for v in range(g.n)]
    remaining: set[Edge] = set(g.edges)
    nbrs = [set(g.neighbors(v)) for v in range(g.n)]
    order: list[Edge] = []
    while remaining:
        v = min(
            (x for x in range(g.n) if deg[x] > 0),
            key=lambda x: (deg[x], x),
        )
        u = min(nbrs[v], key=lambda x: (deg[x], x))
        e = canonical_edge(v, u)
        remaining.discard(e)
        order.append(e)
        nbrs[v].discard(u)
        nbrs[u].discard(v)
        deg[v] -= 1
        deg[u] -= 1
    return order


def _coloring_order(g: Graph) -> list[Edge]:
    return list(reversed(edge_insertion_order(g)))


def _run_kernel(g: Graph, k: int, order_edges: list[Edge]) -> EdgeColoring | None:
    eu = [e[0] for e in g.edges]
    ev = [e[1] for e in g.edges]
    index = {e: i for i, e in enumerate(g.edges)}
    order = [index[e] for e in order_edges]
    colors = kernel.find_coloring(g.n, k, eu, ev, order)
    if colors is None:
        return None
    out = EdgeColoring(g, max(k, 1))
    for e, c in zip(g.edges, colors):
        out.assign(e, c)
    return out


def has_acyclic_coloring(g: Graph, k: int) -> EdgeColoring | None:
    """Find an acyclic edge coloring using colors 1..k, or None."""
    if g.m == 0:
        return EdgeColoring(g, max(k, 1))
    if g.n and k < g.max_degree():
        return None
    return _run_kernel(g, k, _coloring_order(g))


def exact_acyclic_index(g: Graph, upper_bound: int) -> ExactResult | None:
    """Minimum number of colors in an acyclic edge coloring, searched
    bottom-up from the max degree. Returns None when no acyclic coloring
    with at most upper_bound colors exists (in particular whenever the
    bound is below the max degree)."""
    if g.m == 0:
        return ExactResult(0, EdgeColoring(g, 1))
    lo = g.max_degree()
    if upper_bound < lo:
        return None
    order = _coloring_order(g)
    for k in range(lo, upper_bound + 1):
        col = _run_kernel(g, k, order)
        if col is not None:
            return ExactResult(k, col)
    return None


# -- repair moves ------------------------------------------------------------


def repair_recolor_single(
    coloring: EdgeColoring, e: tuple[int, int], new_color: int
) -> RepairOutcome:
    """Recolor one edge, accepting only if the result verifies acyclic."""
    old = coloring.color_of(e)
    if old is None:
        raise ValueError(f"edge {tuple(e)} is not colored")
    if old == new_color:
        return RepairOutcome(accepted=True, coloring=coloring.copy())
    trial = coloring.copy()
    trial.uncolor(e)
    if new_color not in trial.available_colors(e):
        return RepairOutcome(accepted=False, blocking=("unavailable", new_color))
    trial.assign(e, new_color)
    rep = verify(trial)
    if rep.ok:
        return RepairOutcome(accepted=True, coloring=trial)
    return RepairOutcome(accepted=False, blocking=rep.cycle)


def repair_exchange_pair(
    coloring: EdgeColoring, e1: tuple[int, int], e2: tuple[int, int]
) -> RepairOutcome:
    """Swap the colors of two edges sharing a vertex; verify-gated."""
    a = canonical_edge(*e1)
    b = canonical_edge(*e2)
    if not set(a) & set(b):
        raise ValueError(f"edges {a} and {b} do not share a vertex")
    c1 = coloring.color_of(a)
    c2 = coloring.color_of(b)
    if c1 is None or c2 is None:
        raise ValueError("both edges must be colored")
    if c1 == c2:
        return RepairOutcome(accepted=True, coloring=coloring.copy())
    trial = coloring.copy()
    trial.uncolor(a)
    trial.uncolor(b)
    try:
        trial.assign(a, c2)
        trial.assign(b, c1)
    except ValueError:
        return RepairOutcome(accepted=False, blocking=("improper", a, b))
    rep = verify(trial)
    if rep.ok:
        return RepairOutcome(accepted=True, coloring=trial)
    if not rep.proper:
        return RepairOutcome(accepted=False, blocking=("improper", a, b))
    return RepairOutcome(accepted=False, blocking=rep.cycle)


# -- heuristic colorer --------------------------------------------------------


def heuristic_color(
    g: Graph,
    kappa: int,
    move_budget: int | None = None,
    seed: int = 0,
    restarts: int = 3,
) -> SolveOutcome | None:
    """Color all edges with at most kappa colors, repairing stuck states.

    Deterministic for a fixed seed: the first attempt uses the peeling
    order with lowest-color tie-breaking, and each restart reshuffles the
    order and color choices with a seeded generator. Returns None after
    the restart cap, never silently escalating the palette.
    """
    if g.n and kappa < g.max_degree():
        raise ValueError(
            f"palette {kappa} below max degree {g.max_degree()}; properness impossible"
        )
    budget = 50 * g.m if move_budget is None else move_budget
    base_order = _coloring_order(g)
    for attempt in range(restarts + 1):
        if attempt == 0:
            order = list(base_order)
            rng = None
        else:
            rng = random.Random(f"{seed}:{attempt}")
            order = list(base_order)
            rng.shuffle(order)
        outcome = _color_once(g, kappa, order, budget, rng)
        if outcome is not None:
            outcome.restarts_used = attempt
            return outcome
    return None


def _color_once(
    g: Graph,
    kappa: int,
    order: list[Edge],
    budget: int,
    rng: random.Random | None,
) -> SolveOutcome | None:
    col = EdgeColoring(g, kappa)
    moves: list[Move] = []
    queue = deque(order)
    spent = 0
    while queue:
        e = queue.popleft()
        if col.color_of(e) is not None:
            continue
        valid = col.valid_colors(e)
        if valid:
            c = min(valid) if rng is None else rng.choice(sorted(valid))
            col.assign(e, c)
            continue
        repaired, col, spent = _repair_stuck(g, col, e, moves, queue, spent, budget, rng)
        if not repaired:
            return None
        queue.appendleft(e)
    out_colors = len(set(col.colored_edges().values()))
    return SolveOutcome(coloring=col, colors_used=out_colors, moves=moves)


def _repair_stuck(g, col, e, moves, queue, spent, budget, rng):
    """Try the stuck-edge repairs in a fixed order; each attempt costs one
    unit of budget. Returns (ok, coloring, spent)."""
    u, v = canonical_edge(*e)

    # 1. recolor one incident edge, trying the endpoint with more free colors first
    ends = sorted((u, v), key=lambda x: (-len(col.free_colors(x)), x))
    for w in ends:
        for other in sorted(col.used_colors(w)):
            f = col.edge_with_color(w, other)
            trial_base = col.copy()
            trial_base.uncolor(f)
            candidates = sorted(trial_base.valid_colors(f) - {other})
            for c in candidates:
                if spent >= budget:
                    return False, col, spent
                spent += 1
                res = repair_recolor_single(col, f, c)
                if res.accepted and res.coloring.valid_colors(e):
                    moves.append(Move("recolor", (f, other, c)))
                    return True, res.coloring, spent

    # 2. exchange the colors on two edges at a shared endpoint
    for w in ends:
        incident = sorted(col.edge_with_color(w, c) for c in col.used_colors(w))
        for i in range(len(incident)):
            for j in range(i + 1, len(incident)):
                if spent >= budget:
                    return False, col, spent
                spent += 1
                res = repair_exchange_pair(col, incident[i], incident[j])
                if res.accepted and res.coloring.valid_colors(e):
                    moves.append(Move("exchange", (incident[i], incident[j])))
                    return True, res.coloring, spent

    # 3. uncolor a sibling edge, color the stuck edge with the freed color,
    #    and requeue the sibling
    for w in ends:
        for c in sorted(col.used_colors(w)):
            if spent >= budget:
                return False, col, spent
            spent += 1
            f = col.edge_with_color(w, c)
            trial = col.copy()
            trial.uncolor(f)
            if c in trial.valid_colors(e):
                trial.assign(e, c)
                if verify(trial).ok:
                    queue.append(f)
                    moves.append(Move("uncolor-shift", (f, c)))
                    return True, trial, spent
    return False, col, spent
