import pytest

from acecolor.embedding import (
    Drawing,
    degree_charge_total,
    degree_two_face_violations,
    format_drawing,
    parse_drawing,
    planarize,
    triangle_face_budget,
)
from acecolor.errors import EmbeddingError, ParseError
from acecolor.generate import cycle_builder, grid_builder
from acecolor.graph import Graph



def c4_drawing():
    return cycle_builder(4).to_drawing()


def k4_crossed_drawing():
    """K4 drawn as the square 0-1-2-3 with its two diagonals crossing once."""
    base = Graph(4, [(0, 1), (1, 2), (2, 3), (0, 3), (0, 2), (1, 3)])
    rotation = {
        0: [1, 4, 3],
        1: [2, 4, 0],
        2: [3, 4, 1],
        3: [2, 0, 4],
        4: [2, 3, 0, 1],
    }
    return Drawing(base, [((0, 2), (1, 3))], rotation)


def triangle_with_tail_drawing():
    """Triangle 0-1-2 plus the path 0-3-1 drawn below edge 01, putting the
    2-vertex 3 on a 3-face."""
    base = Graph(4, [(0, 1), (1, 2), (0, 2), (0, 3), (1, 3)])
    rotation = {0: [1, 2, 3], 1: [2, 0, 3], 2: [0, 1], 3: [1, 0]}
    return Drawing(base, [], rotation)


def test_c4_faces():
    p = planarize(c4_drawing())
    assert len(p.faces) == 2
    assert sorted(f.degree for f in p.faces) == [4, 4]


def test_single_edge_degenerate_walk():
    d = Drawing(Graph(2, [(0, 1)]), [], {0: [1], 1: [0]})
    p = planarize(d)
    assert len(p.faces) == 1
    assert p.faces[0].degree == 2


def test_zero_crossings_identity():
    d = c4_drawing()
    p = planarize(d)
    assert p.graph == d.base
    assert p.rotation == tuple(tuple(d.rotation[v]) for v in range(4))
    assert p.reconstructed_base_edges() == set(d.base.edges)


def test_k4_crossed_planarization():
    p = planarize(k4_crossed_drawing())
    assert p.graph.n == 5
    assert p.graph.degree(4) == 4
    assert p.is_crossing(4) and not p.is_crossing(0)
    assert sorted(f.degree for f in p.faces) == [3, 3, 3, 3, 4]
    # V - E + F = 5 - 8 + 5 = 2
    assert p.graph.n - p.graph.m + len(p.faces) == 2
    assert degree_charge_total(p) == -8
    assert p.reconstructed_base_edges() == set(p.base.edges)


def test_two_disjoint_crossings_not_adjacent():
    b = grid_builder(3, 4)
    b.insert_crossing(5, 6)
    b.insert_crossing(1, 2)
    p = planarize(b.to_drawing())
    crossings = [v for v in range(p.graph.n) if p.is_crossing(v)]
    assert len(crossings) == 2
    for x in crossings:
        assert all(not p.is_crossing(w) for w in p.graph.neighbors(x))


def test_face_degree_sum_is_twice_edges():
    for builder in (grid_builder(3, 3), grid_builder(2, 5), cycle_builder(7)):
        p = planarize(builder.to_drawing())
        assert sum(f.degree for f in p.faces) == 2 * p.graph.m


def test_triangle_free_base_puts_one_crossing_on_every_3_face():
    b = grid_builder(4, 4)
    b.insert_crossing(5, 6)
    b.insert_crossing(9, 10)
    p = planarize(b.to_drawing())
    assert p.base.is_triangle_free()[0]
    three = [f for f in p.faces if f.degree == 3]
    assert three
    for f in three:
        assert sum(1 for v in f.vertices if p.is_crossing(v)) == 1


def test_charge_identity_examples():
    assert degree_charge_total(planarize(c4_drawing())) == -8
    assert degree_charge_total(planarize(k4_crossed_drawing())) == -8
    b = grid_builder(3, 5)
    b.insert_crossing(6, 7)
    assert degree_charge_total(planarize(b.to_drawing())) == -8


def test_charge_identity_rejects_disconnected():
    base = Graph(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)])
    rotation = {0: [1, 2], 1: [2, 0], 2: [0, 1], 3: [4, 5], 4: [5, 3], 5: [3, 4]}
    p = planarize(Drawing(base, [], rotation))
    with pytest.raises(EmbeddingError):
        degree_charge_total(p)


def test_degree_two_face_violations():
    # subdivided C4: all 2-vertices, both faces large
    p = planarize(cycle_builder(8).to_drawing())
    assert degree_two_face_violations(p) == []
    # a 2-vertex on a 3-face
    p = planarize(triangle_with_tail_drawing())
    violations = degree_two_face_violations(p)
    assert any(v == 3 for v, _ in violations)
    # crossing-free quadrangulation has no 3-faces at all
    p = planarize(grid_builder(3, 3).to_drawing())
    assert degree_two_face_violations(p) == []


def test_triangle_face_budget():
    # crossing-free triangle-free drawing: zero 3-faces
    p = planarize(grid_builder(3, 3).to_drawing())
    count, bound, ok = triangle_face_budget(p, 4)
    assert count == 0 and ok
    # boundary arithmetic: degree 3 vertex with two 2-neighbors, two 3-faces
    p = planarize(triangle_with_tail_drawing())
    count, bound, ok = triangle_face_budget(p, 0)
    assert (count, bound, ok) == (2, 0, False)
    with pytest.raises(ValueError):
        b = grid_builder(3, 4)
        b.insert_crossing(5, 6)
        triangle_face_budget(planarize(b.to_drawing()), 12)  # crossing vertex


def test_drawing_rejects_bad_crossing_pairs():
    base = Graph(4, [(0, 1), (1, 2), (2, 3), (0, 3), (0, 2), (1, 3)])
    rot = {0: [1, 2, 3], 1: [2, 0, 3], 2: [3, 0, 1], 3: [2, 0, 1]}
    with pytest.raises(EmbeddingError):
        Drawing(base, [((0, 2), (0, 1))], rot)  # shares endpoint 0
    with pytest.raises(EmbeddingError):
        Drawing(base, [((0, 2), (1, 3)), ((0, 2), (1, 3))], rot)  # edge crossed twice
    with pytest.raises(EmbeddingError):
        Drawing(Graph(3, [(0, 1)]), [((0, 1), (1, 2))], {})  # non-edge in pair


def test_planarize_rejects_inconsistent_rotation():
    base = Graph(3, [(0, 1), (1, 2)])
    with pytest.raises(EmbeddingError):
        planarize(Drawing(base, [], {0: [1], 1: [0], 2: [1]}))  # missing 2 in rot[1]? no: rot[1] lacks 2
    with pytest.raises(EmbeddingError):
        planarize(Drawing(base, [], {0: [1], 1: [0, 2]}))  # rotation missing vertex 2
    with pytest.raises(EmbeddingError):
        planarize(Drawing(base, [], {0: [1, 2], 1: [0, 2], 2: [1, 0]}))  # 0-2 not an edge


def test_planarize_rejects_nonplanar_rotation():
    # K4 with every rotation in ascending order traces only 2 faces, a
    # genus-1 system: V - E + F = 4 - 6 + 2 = 0, rejected
    base = Graph(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])
    rotation = {0: [1, 2, 3], 1: [0, 2, 3], 2: [0, 1, 3], 3: [0, 1, 2]}
    with pytest.raises(EmbeddingError):
        planarize(Drawing(base, [], rotation))


def test_planarize_rejects_bad_crossing_rotation():
    d = k4_crossed_drawing()
    rot = {v: list(r) for v, r in d.rotation.items()}
    rot[4] = [2, 0, 3, 1]  # segments of the same edge adjacent, not opposite
    with pytest.raises(EmbeddingError):
        planarize(Drawing(d.base, list(d.crossing_pairs), rot))


def test_drawing_file_roundtrip():
    b = grid_builder(3, 4)
    b.insert_crossing(5, 6)
    d = b.to_drawing()
    text = format_drawing(d)
    back = parse_drawing(text)
    assert back.base == d.base
    assert back.crossing_pairs == d.crossing_pairs
    assert back.rotation == d.rotation
    assert format_drawing(back) == text
    # and the parsed drawing planarizes identically
    assert degree_charge_total(planarize(back)) == -8


def test_parse_drawing_rejects_malformed():
    good = format_drawing(k4_crossed_drawing())
    with pytest.raises(ParseError):
        parse_drawing(good.replace("x 0 2 1 3", "x 0 2 1"))
    with pytest.raises(ParseError):
        parse_drawing(good.replace("rot X0:", "rot X7:"))
    with pytest.raises(ParseError):
        parse_drawing(good + "rot 0: 1 4 3\n")  # duplicate rotation
    with pytest.raises(ParseError):
        parse_drawing("2 1\n0 1\nrot 0: 1\nrot 1: 0\nnonsense\n")
