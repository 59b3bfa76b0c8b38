"""Hand-built drawing fixtures shared by the discharging and acceptance tests."""

from __future__ import annotations

from acecolor.generate import DrawingBuilder, grid_builder


def attach_square(b: DrawingBuilder, z: int, after: int) -> None:
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


def subdivided_grid_two_vertex():
    """3x4 grid with one interior edge subdivided: the new 2-vertex has
    two supports of degree >= 3 and no 3-face, the balanced case."""
    b = grid_builder(3, 4)
    w = b.subdivide(5, 6)
    return b.to_drawing(), w


def crossed_grid():
    """4x4 grid with one crossing insertion: two 3-faces, each carrying
    one crossing and two real vertices."""
    b = grid_builder(4, 4)
    b.insert_crossing(5, 6)
    return b.to_drawing()


def five_vertex_fixture():
    """A drawing holding a 5-vertex with exactly three 8+ neighbors and
    exactly three incident 3-faces (center vertex 0): a spoked ring inside
    an annulus, degree pumps on three ring/outer vertices, and three
    crossing insertions whose chords meet at the center."""
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
