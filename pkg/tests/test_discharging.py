from fractions import Fraction

import pytest

from acecolor.discharging import (
    ChargeLedger,
    Transfer,
    apply_rules,
    conservation_check,
    discharge,
    element_hypothesis_failures,
    initial_charges,
)
from acecolor.embedding import planarize
from acecolor.errors import EmbeddingError
from acecolor.generate import DrawingBuilder, cycle_builder, generate_instance, grid_builder


def attach_square(b, z, after):
    """Degree-padding gadget: hang a 4-cycle at z inside the face corner
    following neighbor `after` in z's rotation."""
    w1, w2, w3 = b.n, b.n + 1, b.n + 2
    b.n += 3
    for e in [(z, w1), (w1, w2), (w2, w3), (w3, z)]:
        b.edges.add((min(e), max(e)))
    i = b.rotation[z].index(after)
    b.rotation[z][i + 1 : i + 1] = [w1, w3]
    b.rotation[w1] = [z, w2]
    b.rotation[w2] = [w1, w3]
    b.rotation[w3] = [w2, z]


def five_vertex_fixture():
    """A drawing holding a 5-vertex with exactly three 8+ neighbors and
    exactly three incident 3-faces: wheel-with-ring base, degree pumps,
    and three crossing insertions. Center vertex is 0."""
    v = 0
    r = [1 + i for i in range(8)]
    y = [9 + i for i in range(8)]
    edges = [(v, r[i]) for i in (0, 2, 4, 6)]
    rotation = {v: [r[0], r[2], r[4], r[6]]}
    for i in range(8):
        edges.append((r[i], r[(i + 1) % 8]))
        edges.append((y[i], y[(i + 1) % 8]))
        edges.append((r[i], y[i]))
        if i % 2 == 0:
            rotation[r[i]] = [y[i], r[(i + 1) % 8], v, r[(i - 1) % 8]]
        else:
            rotation[r[i]] = [y[i], r[(i + 1) % 8], r[(i - 1) % 8]]
        rotation[y[i]] = [y[(i + 1) % 8], r[i], y[(i - 1) % 8]]
    b = DrawingBuilder(17, edges, rotation)
    attach_square(b, r[2], y[2])
    attach_square(b, r[2], r[1])
    attach_square(b, r[6], r[5])
    attach_square(b, r[6], r[5])
    attach_square(b, y[7], y[6])
    attach_square(b, y[7], y[6])
    b.insert_crossing(v, r[0])
    b.insert_crossing(v, r[4])
    b.insert_crossing(r[7], r[6])
    return b.to_drawing()


def test_initial_charges_basics():
    b = grid_builder(3, 4)
    w = b.subdivide(5, 6)
    d = b.to_drawing()
    p = planarize(d)
    led = initial_charges(p)
    assert led.charges[("v", w)] == Fraction(-2)  # 2-vertex
    assert led.total() == Fraction(-8)
    # crossing vertex carries 0
    b = grid_builder(3, 4)
    x = b.insert_crossing(5, 6)
    p = planarize(b.to_drawing())
    led = initial_charges(p)
    assert led.charges[("v", x)] == Fraction(0)
    three = [i for i, f in enumerate(p.faces) if f.degree == 3]
    assert all(led.charges[("f", i)] == Fraction(-1) for i in three)


def test_initial_charges_c4():
    p = planarize(cycle_builder(4).to_drawing())
    led = initial_charges(p)
    assert led.total() == Fraction(-8)
    assert all(led.charges[("v", v)] == Fraction(-2) for v in range(4))


def test_initial_charges_rejects_disconnected():
    from acecolor.embedding import Drawing
    from acecolor.graph import Graph

    base = Graph(8, [(0, 1), (1, 2), (2, 3), (3, 0), (4, 5), (5, 6), (6, 7), (7, 4)])
    rot = {v: [(v - 1) % 4 if v % 4 == 0 else v - 1, (v + 1) if v % 4 != 3 else v - 3] for v in range(8)}
    rot = {
        0: [1, 3], 1: [2, 0], 2: [3, 1], 3: [0, 2],
        4: [5, 7], 5: [6, 4], 6: [7, 5], 7: [4, 6],
    }
    p = planarize(Drawing(base, [], rot))
    with pytest.raises(EmbeddingError):
        initial_charges(p)


def test_worked_computation_two_vertex():
    # a 2-vertex with both supports of degree >= 3 ends at exactly zero:
    # -2 initial, +1 from each neighbor, pays nothing
    b = grid_builder(3, 4)
    w = b.subdivide(5, 6)
    d = b.to_drawing()
    p = planarize(d)
    led = apply_rules(initial_charges(p), p, d.base)
    assert led.charges[("v", w)] == Fraction(0)
    incoming = [t for t in led.transfers if t.target == ("v", w)]
    assert [t.amount for t in incoming] == [Fraction(1), Fraction(1)]
    assert all(t.rule == "deg2-from-neighbors" for t in incoming)
    assert not [t for t in led.transfers if t.source == ("v", w)]


def test_worked_computation_three_face():
    # a 3-face from a crossing insertion: one crossing + two real
    # vertices, receives exactly 2 x 1/2: -1 + 1 = 0
    b = grid_builder(4, 4)
    b.insert_crossing(5, 6)
    d = b.to_drawing()
    p = planarize(d)
    led = apply_rules(initial_charges(p), p, d.base)
    three = [i for i, f in enumerate(p.faces) if f.degree == 3]
    assert three
    for i in three:
        assert led.charges[("f", i)] == Fraction(0)
        incoming = [t for t in led.transfers if t.target == ("f", i)]
        assert [t.amount for t in incoming] == [Fraction(1, 2), Fraction(1, 2)]
        assert all(t.rule == "triface-from-real" for t in incoming)


def test_worked_computation_five_vertex():
    # 5-vertex with exactly three 8+ neighbors and three 3-faces:
    # 5 - 4 + 3*(1/6) - 3*(1/2) = 0, bit-exact
    d = five_vertex_fixture()
    p = planarize(d)
    g = d.base
    assert g.degree(0) == 5
    assert sorted(g.degree(u) >= 8 for u in g.neighbors(0)).count(True) == 3
    assert sum(1 for i in p.faces_at(0) if p.faces[i].degree == 3) == 3
    led = apply_rules(initial_charges(p), p, g)
    assert led.charges[("v", 0)] == Fraction(0)
    incoming = [t for t in led.transfers if t.target == ("v", 0)]
    outgoing = [t for t in led.transfers if t.source == ("v", 0)]
    assert [t.amount for t in incoming] == [Fraction(1, 6)] * 3
    assert [t.amount for t in outgoing] == [Fraction(1, 2)] * 3
    assert {t.rule for t in incoming} == {"deg5-sixth"}
    assert {t.rule for t in outgoing} == {"triface-from-real"}


def test_conservation_on_fresh_and_applied_ledgers():
    b = grid_builder(3, 5)
    b.insert_crossing(6, 7)
    d = b.to_drawing()
    p = planarize(d)
    led0 = initial_charges(p)
    assert conservation_check(led0, led0)
    led1 = apply_rules(led0, p, d.base)
    assert conservation_check(led0, led1)
    assert led1.total() == Fraction(-8)


def test_conservation_detects_fabricated_transfer():
    p = planarize(grid_builder(3, 3).to_drawing())
    led0 = initial_charges(p)
    forged = led0.copy()
    forged.charges[("v", 0)] += Fraction(1, 2)  # one-sided transfer
    forged.transfers.append(
        Transfer("forged", ("v", 1), ("v", 0), Fraction(1, 2))
    )
    assert not conservation_check(led0, forged)
    with pytest.raises(ValueError):
        other = ChargeLedger({("v", 99): Fraction(0)})
        conservation_check(led0, other)


def test_crossing_vertices_end_at_exactly_zero():
    for seed in range(6):
        d = generate_instance("grid-with-crossings", seed)
        p = planarize(d)
        rep = discharge(p, d.base)
        for x in range(p.n_real, p.graph.n):
            assert rep.charges[("v", x)] == Fraction(0)


def test_corpus_conservation_and_blame():
    for fam in ("subdivided-quadrangulation", "grid-with-crossings", "named"):
        for seed in range(5):
            d = generate_instance(fam, seed)
            p = planarize(d)
            g = d.base
            kappa = g.max_degree() + 16
            rep = discharge(p, g, kappa)
            assert rep.total == Fraction(-8)
            assert rep.conserved
            assert rep.negative_elements
            for ne in rep.negative_elements:
                assert ne.violated, (fam, seed, ne.element)


def test_hypothesis_soundness_elementwise():
    # all attached hypotheses hold => final charge >= 0, element by element
    for fam in ("subdivided-quadrangulation", "grid-with-crossings", "named"):
        for seed in range(5):
            d = generate_instance(fam, seed)
            p = planarize(d)
            g = d.base
            kappa = g.max_degree() + 16
            led = apply_rules(initial_charges(p), p, g, kappa)
            for elem, charge in led.charges.items():
                if not element_hypothesis_failures(p, g, kappa, elem):
                    assert charge >= 0, (fam, seed, elem, charge)


def test_three_vertex_blamed_when_next_to_light_vertex():
    # 3-vertices adjacent to small-degree vertices violate the 3-vertex
    # neighbor condition and may carry negative charge; the audit says so
    p = planarize(grid_builder(3, 3).to_drawing())
    g = p.base
    kappa = g.max_degree() + 16
    rep = discharge(p, g, kappa)
    negative_threes = [
        ne for ne in rep.negative_elements
        if ne.element[0] == "v" and g.degree(ne.element[1]) == 3
    ]
    assert negative_threes
    for ne in negative_threes:
        assert any(v.hypothesis == "deg3-big-neighbors" for v in ne.violated)


def test_report_serialization():
    b = grid_builder(3, 4)
    b.insert_crossing(5, 6)
    d = b.to_drawing()
    p = planarize(d)
    rep = discharge(p, d.base)
    text = rep.to_text()
    assert "total=-8/1" in text
    assert "conserved=yes" in text
    doc = rep.to_json()
    assert doc["total"] == "-8/1"
    assert doc["conserved"] is True
    assert all("/" in row["charge"] for row in doc["negative_elements"])
    led = apply_rules(initial_charges(p), p, d.base)
    assert sum(doc["rule_firings"].values()) == len(led.transfers)
