"""Discharging on the plane graph of a triangle-free 1-planar drawing.

Every vertex and face of the planarized drawing starts with charge
deg - 4; the total is exactly -8 on a connected drawing. Eight local
rules then move charge toward the light elements (2-, 3-, 4-, 5-vertices
and 3-faces). Rules transfer exact rationals and read only the input
structure, so they commute and conserve the total.

Vertex-to-vertex rules follow adjacency in the *base* graph, never in the
planarized one; crossing vertices neither send nor receive (they hold
charge 0 throughout). Face rules count incidences per boundary-walk slot.

Thresholds scale with the palette slack kappa - max_degree: a "tight"
vertex has degree slack+2, a "high" vertex slack+3 or more, a "huge"
vertex slack+6 or more. At the default slack of 16 these are 18, 19+ and
22+. The small thresholds (10, 9, 8) are fixed rule constants.

The audit attaches to every negative element the structural hypotheses
whose failure explains the deficit; if all attached hypotheses hold, the
element cannot be negative (this implication is what the test suite
checks instance by instance).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .conditions import Condition, check_condition
from .embedding import PlaneGraph
from .errors import EmbeddingError
from .graph import Graph
from .solver import DEFAULT_SLACK

Element = tuple[str, int]  # ("v", vertex id) or ("f", face index)

HALF = Fraction(1, 2)
THIRD = Fraction(1, 3)
QUARTER = Fraction(1, 4)
SIXTH = Fraction(1, 6)
THREE_HALVES = Fraction(3, 2)

# audit-only face-profile hypotheses, alongside the Condition values
HYP_DEG3_FACE_PROFILE = "deg3-face-profile"
HYP_NO_CONSECUTIVE_DEG3 = "no-consecutive-deg3"


@dataclass(frozen=True)
class Transfer:
    rule: str
    source: Element
    target: Element
    amount: Fraction


@dataclass
class ChargeLedger:
    charges: dict[Element, Fraction]
    transfers: list[Transfer] = field(default_factory=list)

    def total(self) -> Fraction:
        return sum(self.charges.values(), Fraction(0))

    def copy(self) -> "ChargeLedger":
        return ChargeLedger(dict(self.charges), list(self.transfers))


@dataclass(frozen=True)
class Violation:
    hypothesis: str
    detail: str


@dataclass(frozen=True)
class NegativeElement:
    element: Element
    charge: Fraction
    violated: tuple[Violation, ...]


@dataclass
class DischargeReport:
    total: Fraction
    conserved: bool
    rule_firings: dict[str, int]
    negative_elements: list[NegativeElement]
    charges: dict[Element, Fraction]

    def to_text(self) -> str:
        lines = [
            f"total={_frac(self.total)} conserved={'yes' if self.conserved else 'no'}"
        ]
        for rule in sorted(self.rule_firings):
            lines.append(f"rule.{rule}={self.rule_firings[rule]}")
        lines.append(f"negative={len(self.negative_elements)}")
        for ne in self.negative_elements:
            kind, idx = ne.element
            hyps = ",".join(v.hypothesis for v in ne.violated) or "-"
            lines.append(f"elem={kind}:{idx} charge={_frac(ne.charge)} violated={hyps}")
        return "\n".join(lines) + "\n"

    def to_json(self) -> dict:
        return {
            "total": _frac(self.total),
            "conserved": self.conserved,
            "rule_firings": dict(sorted(self.rule_firings.items())),
            "negative_elements": [
                {
                    "element": f"{ne.element[0]}:{ne.element[1]}",
                    "charge": _frac(ne.charge),
                    "violated": [
                        {"hypothesis": v.hypothesis, "detail": v.detail}
                        for v in ne.violated
                    ],
                }
                for ne in self.negative_elements
            ],
        }


def _frac(q: Fraction) -> str:
    return f"{q.numerator}/{q.denominator}"


def initial_charges(p: PlaneGraph) -> ChargeLedger:
    """Charge deg - 4 on every planarized vertex and every face."""
    if not p.graph.is_connected():
        raise EmbeddingError("discharging requires a connected drawing")
    charges: dict[Element, Fraction] = {}
    for v in range(p.graph.n):
        charges[("v", v)] = Fraction(p.graph.degree(v) - 4)
    for i, f in enumerate(p.faces):
        charges[("f", i)] = Fraction(f.degree - 4)
    return ChargeLedger(charges)


def _rule_thresholds(g: Graph, kappa: int) -> tuple[int, int, int]:
    slack = kappa - (g.max_degree() if g.n else 0)
    return slack + 2, slack + 3, slack + 6  # tight, high, huge


def compute_transfers(p: PlaneGraph, g: Graph, kappa: int | None = None) -> list[Transfer]:
    """All rule firings, computed from the pre-rule structure only."""
    if kappa is None:
        kappa = (g.max_degree() if g.n else 0) + DEFAULT_SLACK
    tight, high, huge = _rule_thresholds(g, kappa)
    deg = g.degree
    out: list[Transfer] = []

    for v in range(g.n):
        d = deg(v)
        if d == 2:
            for u in g.neighbors(v):
                out.append(Transfer("deg2-from-neighbors", ("v", u), ("v", v), Fraction(1)))
        elif d == 3:
            for u in g.neighbors(v):
                if deg(u) == tight:
                    out.append(Transfer("deg3-from-tight", ("v", u), ("v", v), THREE_HALVES))
                elif deg(u) >= high:
                    out.append(Transfer("deg3-from-high", ("v", u), ("v", v), HALF))
        elif d == 4:
            degs = sorted(deg(u) for u in g.neighbors(v))
            if degs[0] >= 10:
                for u in g.neighbors(v):
                    out.append(Transfer("deg4-quarter", ("v", u), ("v", v), QUARTER))
            elif degs[0] <= 9 and degs[1] >= huge:
                for u in g.neighbors(v):
                    if deg(u) >= huge:
                        out.append(Transfer("deg4-third", ("v", u), ("v", v), THIRD))
        elif d == 5:
            for u in g.neighbors(v):
                if deg(u) >= 8:
                    out.append(Transfer("deg5-sixth", ("v", u), ("v", v), SIXTH))

    for i, f in enumerate(p.faces):
        if f.degree == 3:
            for v in f.vertices:
                if not p.is_crossing(v):
                    out.append(Transfer("triface-from-real", ("v", v), ("f", i), HALF))
        elif f.degree >= 5:
            for v in f.vertices:
                if not p.is_crossing(v) and deg(v) == 3:
                    out.append(Transfer("deg3-from-bigface", ("f", i), ("v", v), HALF))
    return out


def apply_rules(ledger: ChargeLedger, p: PlaneGraph, g: Graph, kappa: int | None = None) -> ChargeLedger:
    """Apply every rule firing once; returns a new ledger with the log."""
    out = ledger.copy()
    for t in compute_transfers(p, g, kappa):
        out.charges[t.source] -= t.amount
        out.charges[t.target] += t.amount
        out.transfers.append(t)
    return out


def conservation_check(before: ChargeLedger, after: ChargeLedger) -> bool:
    """Totals must agree (transfers are zero-sum) over the same elements."""
    if set(before.charges) != set(after.charges):
        raise ValueError("ledgers cover different element sets")
    return before.total() == after.total()


# -- the audit ---------------------------------------------------------------------


def _face_profile_deg3(p: PlaneGraph, v: int) -> Violation | None:
    """A 3-vertex on two 3-faces must also touch a 5+ face."""
    faces = [p.faces[i].degree for i in p.faces_at(v)]
    three = sum(1 for d in faces if d == 3)
    if three >= 2 and not any(d >= 5 for d in faces):
        return Violation(
            HYP_DEG3_FACE_PROFILE,
            f"3-vertex {v} has incident face degrees {sorted(faces)}: two "
            "3-faces but no 5+ face",
        )
    return None


def _face_no_consecutive_deg3(p: PlaneGraph, g: Graph, fi: int) -> Violation | None:
    walk = p.faces[fi].vertices
    d = len(walk)
    for i in range(d):
        a, b = walk[i], walk[(i + 1) % d]
        if (
            not p.is_crossing(a)
            and not p.is_crossing(b)
            and g.degree(a) == 3
            and g.degree(b) == 3
        ):
            return Violation(
                HYP_NO_CONSECUTIVE_DEG3,
                f"face {fi} has consecutive 3-vertices {a}, {b} on its boundary",
            )
    return None


def _condition_violations(g, plane, kappa, cond, vertices) -> list[Violation]:
    found = check_condition(g, plane, kappa, cond, vertices=vertices)
    return [Violation(cond.value, w.detail) for w in found]


def element_hypothesis_failures(
    p: PlaneGraph, g: Graph, kappa: int, elem: Element
) -> list[Violation]:
    """Violated local hypotheses for one element's degree class.

    The hypothesis sets mirror the per-class nonnegativity argument: if
    the returned list is empty, the element's final charge is >= 0.
    Crossing vertices and 3-/4-faces need no hypotheses at all.
    """
    kind, idx = elem
    out: list[Violation] = []
    if kind == "f":
        if p.faces[idx].degree >= 5:
            v = _face_no_consecutive_deg3(p, g, idx)
            if v:
                out.append(v)
        return out

    v = idx
    if p.is_crossing(v):
        return []
    d = g.degree(v)
    deg2_neighbors = [u for u in g.neighbors(v) if g.degree(u) == 2]

    def cond(c: Condition, at=None) -> None:
        out.extend(_condition_violations(g, p, kappa, c, (v,) if at is None else at))

    if d == 2:
        cond(Condition.DEG2_BIG_NEIGHBORS)
        cond(Condition.DEG2_FACE_SIZES)
    elif d == 3:
        cond(Condition.DEG3_BIG_NEIGHBORS)
        cond(Condition.TRIANGLE_FACE_BUDGET)
        prof = _face_profile_deg3(p, v)
        if prof:
            out.append(prof)
    elif d in (4, 5, 6, 7, 8, 9):
        if d == 4:
            cond(Condition.DEG4_NEIGHBOR_PROFILE)
        elif d == 5:
            cond(Condition.DEG5_NEIGHBOR_PROFILE)
        cond(Condition.TRIANGLE_FACE_BUDGET)
        if deg2_neighbors:
            cond(Condition.DEG2_BIG_NEIGHBORS, at=tuple(deg2_neighbors))
    else:  # d >= 10
        cond(Condition.TRIANGLE_FACE_BUDGET)
        if deg2_neighbors:
            cond(Condition.HEAVY_DEG2_SUPPORT)
        else:
            tight, high, huge = _rule_thresholds(g, kappa)
            if d == tight:
                cond(Condition.TIGHT_VERTEX_SMALL_NEIGHBOR)
            elif high <= d < huge:
                cond(Condition.TWO_DEG4_NEIGHBORS)
    return out


def audit_final_charges(
    ledger: ChargeLedger, p: PlaneGraph, g: Graph, kappa: int
) -> DischargeReport:
    """Per-element final-charge audit after the rules were applied.

    Every negative element is reported together with the violated local
    hypotheses of its class; for a connected drawing the total is -8, so
    the negative list is never empty on valid input.
    """
    firings: dict[str, int] = {}
    for t in ledger.transfers:
        firings[t.rule] = firings.get(t.rule, 0) + 1
    total = ledger.total()
    negative: list[NegativeElement] = []
    for elem in sorted(ledger.charges):
        q = ledger.charges[elem]
        if q < 0:
            violated = tuple(element_hypothesis_failures(p, g, kappa, elem))
            negative.append(NegativeElement(elem, q, violated))
    return DischargeReport(
        total=total,
        conserved=total == Fraction(-8),
        rule_firings=firings,
        negative_elements=negative,
        charges=dict(ledger.charges),
    )


def discharge(p: PlaneGraph, g: Graph, kappa: int | None = None) -> DischargeReport:
    """Full pipeline: initial charges, rules, audit."""
    if kappa is None:
        kappa = (g.max_degree() if g.n else 0) + DEFAULT_SLACK
    ledger = apply_rules(initial_charges(p), p, g, kappa)
    return audit_final_charges(ledger, p, g, kappa)
