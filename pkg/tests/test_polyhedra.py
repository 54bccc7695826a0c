from fractions import Fraction

import pytest

from tropconv import polyhedra
from tropconv.polyhedra import (
    EmptyPolyhedronError,
    HDescription,
    NotPointedError,
    bounded_faces,
    dd_enumerate,
    f_vector,
    facets_from_generators,
    is_simple,
    lower_hull_subdivision,
)


def F(x):
    return Fraction(x)


def _h(dim, rows, eqs=()):
    return HDescription.build(dim, rows, eqs)


def test_unit_square():
    # 0 <= x <= 1, 0 <= y <= 1
    h = _h(2, [(0, (-1, 0)), (1, (1, 0)), (0, (0, -1)), (1, (0, 1))])
    v = dd_enumerate(h)
    assert sorted(v.vertices) == [(0, 0), (0, 1), (1, 0), (1, 1)]
    assert v.rays == []
    assert f_vector(bounded_faces(v)) == (4, 4, 1)
    assert is_simple(v)


def test_quadrant_has_rays():
    h = _h(2, [(0, (-1, 0)), (0, (0, -1))])
    v = dd_enumerate(h)
    assert v.vertices == [(0, 0)]
    assert sorted(v.rays) == [(0, 1), (1, 0)]
    # only the apex is a bounded face
    assert f_vector(bounded_faces(v)) == (1,)


def test_empty_polyhedron():
    h = _h(1, [(0, (1,)), (-1, (-1,))])  # x <= 0 and x >= 1
    with pytest.raises(EmptyPolyhedronError):
        dd_enumerate(h)


def test_non_pointed():
    # a single halfplane in the plane contains a line
    h = _h(2, [(0, (1, 0))])
    with pytest.raises(NotPointedError):
        dd_enumerate(h)


def test_equations():
    # x + y = 1 inside the unit square: a segment
    h = _h(
        2,
        [(0, (-1, 0)), (1, (1, 0)), (0, (0, -1)), (1, (0, 1))],
        eqs=[(1, (1, 1))],
    )
    v = dd_enumerate(h)
    assert sorted(v.vertices) == [(0, 1), (1, 0)]


def test_square_pyramid_not_simple():
    # apex (0,0,1) over the square [-1,1]^2
    verts = [(-1, -1, 0), (-1, 1, 0), (1, -1, 0), (1, 1, 0), (0, 0, 1)]
    verts = [tuple(F(x) for x in p) for p in verts]
    hd = facets_from_generators(verts, [])
    assert len(hd.inequalities) == 5
    vd = dd_enumerate(hd)
    assert sorted(vd.vertices) == sorted(verts)
    assert not is_simple(vd)


def test_cube_facets_round_trip():
    verts = [
        tuple(F(x) for x in (a, b, c))
        for a in (0, 1)
        for b in (0, 1)
        for c in (0, 1)
    ]
    hd = facets_from_generators(verts, [])
    assert len(hd.inequalities) == 6
    vd = dd_enumerate(hd)
    assert sorted(vd.vertices) == sorted(verts)
    assert f_vector(bounded_faces(vd)) == (8, 12, 6, 1)
    assert is_simple(vd)


def test_lower_hull_triangulates_convex_heights():
    pts = [(F(i),) for i in range(4)]
    heights = [F(i * i) for i in range(4)]  # strictly convex lift
    cells = lower_hull_subdivision(pts, heights)
    assert sorted(sorted(c) for c in cells) == [[0, 1], [1, 2], [2, 3]]


def test_lower_hull_flat_lift_is_trivial():
    pts = [(F(i),) for i in range(4)]
    cells = lower_hull_subdivision(pts, [F(0)] * 4)
    assert sorted(sorted(c) for c in cells) == [[0, 1, 2, 3]]


def test_lower_hull_partial_flat():
    pts = [(F(i),) for i in range(4)]
    # flat on {0,1,2}, break at 3
    cells = lower_hull_subdivision(pts, [F(0), F(0), F(0), F(5)])
    assert sorted(sorted(c) for c in cells) == [[0, 1, 2], [2, 3]]


def test_rank_and_nullspace():
    rows = [[F(1), F(2)], [F(2), F(4)]]
    assert polyhedra._rank(rows) == 1
    ns = polyhedra._nullspace(rows, 2)
    assert len(ns) == 1
    x, y = ns[0]
    assert x + 2 * y == 0
