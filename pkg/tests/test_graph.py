from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from acecolor.errors import ParseError
from acecolor.graph import (
    Graph,
    Multiset,
    format_graph,
    multiset_union,
    parse_graph,
)

from graphlib import complete, cycle, petersen, star


def test_degree_cycle():
    c4 = cycle(4)
    assert all(c4.degree(v) == 2 for v in range(4))


def test_degree_star_center():
    assert star(5).degree(0) == 5


def test_degree_empty_graph():
    g = Graph(3, [])
    assert g.degree(0) == 0


def test_degree_invalid_vertex():
    with pytest.raises(ValueError):
        cycle(4).degree(7)


def test_max_min_degree():
    assert (cycle(4).max_degree(), cycle(4).min_degree()) == (2, 2)
    assert (star(5).max_degree(), star(5).min_degree()) == (5, 1)
    k4 = complete(4)
    assert (k4.max_degree(), k4.min_degree()) == (3, 3)


def test_max_degree_empty_vertex_set():
    g = Graph(0, [])
    with pytest.raises(ValueError):
        g.max_degree()
    with pytest.raises(ValueError):
        g.min_degree()


def test_rejects_loops_and_duplicates():
    with pytest.raises(ValueError):
        Graph(3, [(0, 0)])
    with pytest.raises(ValueError):
        Graph(3, [(0, 1), (1, 0)])
    with pytest.raises(ValueError):
        Graph(2, [(0, 5)])


def test_without_edge_is_a_copy():
    c4 = cycle(4)
    g = c4.without_edge(0, 1)
    assert g.m == 3 and c4.m == 4
    with pytest.raises(ValueError):
        c4.without_edge(0, 2)


def test_triangle_free():
    ok, wit = cycle(4).is_triangle_free()
    assert ok and wit is None
    ok, wit = complete(4).is_triangle_free()
    assert not ok
    u, v, w = wit
    k4 = complete(4)
    assert k4.has_edge(u, v) and k4.has_edge(v, w) and k4.has_edge(u, w)


def test_petersen_triangle_free_matches_bruteforce():
    g = petersen()
    ok, _ = g.is_triangle_free()
    brute = not any(
        g.has_edge(a, b) and g.has_edge(b, c) and g.has_edge(a, c)
        for a, b, c in combinations(range(g.n), 3)
    )
    assert ok == brute is True


@settings(max_examples=60, deadline=None)
@given(st.integers(2, 8), st.data())
def test_triangle_free_agrees_with_triple_enumeration(n, data):
    all_edges = [(i, j) for i in range(n) for j in range(i + 1, n)]
    chosen = data.draw(st.lists(st.sampled_from(all_edges), unique=True, max_size=len(all_edges)))
    g = Graph(n, chosen)
    ok, wit = g.is_triangle_free()
    brute = not any(
        g.has_edge(a, b) and g.has_edge(b, c) and g.has_edge(a, c)
        for a, b, c in combinations(range(n), 3)
    )
    assert ok == brute
    if not ok:
        a, b, c = wit
        assert g.has_edge(a, b) and g.has_edge(b, c) and g.has_edge(a, c)


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 9), st.data())
def test_degree_sum_is_twice_edge_count(n, data):
    all_edges = [(i, j) for i in range(n) for j in range(i + 1, n)]
    chosen = (
        data.draw(st.lists(st.sampled_from(all_edges), unique=True, max_size=len(all_edges)))
        if all_edges
        else []
    )
    g = Graph(n, chosen)
    assert sum(g.degree(v) for v in range(n)) == 2 * g.m


def test_count_neighbors_with_degree_at_least():
    s = star(5)
    assert s.count_neighbors_with_degree_at_least(0, 1) == 5
    assert s.count_neighbors_with_degree_at_least(0, 2) == 0
    assert cycle(4).count_neighbors_with_degree_at_least(0, 2) == 2


def test_multiset_union_examples():
    a = Multiset([1, 1, 2])
    b = Multiset([2, 3])
    u = multiset_union(a, b)
    assert u.mul(1) == 2 and u.mul(2) == 2 and u.mul(3) == 1
    assert multiset_union(a, Multiset()) == a
    triple = multiset_union(multiset_union(Multiset([5]), Multiset([5])), Multiset([5]))
    assert triple.mul(5) == 3
    assert u.mul(99) == 0


def test_multiset_rejects_nonpositive_multiplicity():
    with pytest.raises(ValueError):
        Multiset({1: 0})


@settings(max_examples=80, deadline=None)
@given(
    st.lists(st.integers(0, 5), max_size=8),
    st.lists(st.integers(0, 5), max_size=8),
    st.lists(st.integers(0, 5), max_size=8),
)
def test_multiset_union_commutative_associative(xs, ys, zs):
    a, b, c = Multiset(xs), Multiset(ys), Multiset(zs)
    assert multiset_union(a, b) == multiset_union(b, a)
    assert multiset_union(multiset_union(a, b), c) == multiset_union(a, multiset_union(b, c))
    for x in set(xs) | set(ys):
        assert multiset_union(a, b).mul(x) == a.mul(x) + b.mul(x)


def test_parse_format_roundtrip():
    g = petersen()
    assert parse_graph(format_graph(g)) == g


def test_parse_rejects_malformed():
    with pytest.raises(ParseError):
        parse_graph("")
    with pytest.raises(ParseError):
        parse_graph("3\n0 1\n")
    with pytest.raises(ParseError):
        parse_graph("3 2\n0 1\n")
    with pytest.raises(ParseError):
        parse_graph("3 1\n0 0\n")
    with pytest.raises(ParseError):
        parse_graph("3 2\n0 1\n1 0\n")
    with pytest.raises(ParseError):
        parse_graph("2 1\n0 1\nextra\n")


def test_connectivity_helpers():
    g = Graph(5, [(0, 1), (1, 2), (3, 4)])
    assert not g.is_connected()
    assert g.connected_components() == [[0, 1, 2], [3, 4]]
    assert cycle(5).is_connected()


def test_articulation_points():
    # path: every interior vertex is a cut vertex
    p = Graph(4, [(0, 1), (1, 2), (2, 3)])
    assert p.articulation_points() == [1, 2]
    assert cycle(5).articulation_points() == []
    # two cycles sharing one vertex
    g = Graph(5, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 2)])
    assert g.articulation_points() == [2]
