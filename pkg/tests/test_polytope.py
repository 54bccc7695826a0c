from fractions import Fraction

import pytest

from conftest import config, pt
from tropconv import polytope
from tropconv.polytope import (
    PreconditionError,
    TropicalHalfspace,
    bounded_complex,
    cell_type,
    contains,
    coords_from_type,
    cornered_hull,
    corners,
    dual_subdivision,
    halfspace_contains,
    halfspace_included,
    is_sufficiently_generic,
    minimal_halfspaces,
    pseudo_vertices,
    tropical_vertex_indices,
    tropical_vertices,
    type_of,
)


def test_type_of(example):
    assert type_of(example, pt(0, 3, 2)) == (
        frozenset({1, 2}),
        frozenset({1, 3}),
        frozenset({2, 4}),
    )
    # a generator always appears in each entry of its own type
    for k, v in enumerate(example.points, start=1):
        T = type_of(example, v)
        assert all(k in entry or entry for entry in T)
    # far outside: some entry is empty
    T = type_of(example, pt(0, 100, 100))
    assert any(not entry for entry in T)


def test_contains(example):
    assert contains(example, pt(0, 3, 2))
    assert contains(example, pt(0, 3, 6))
    assert not contains(example, pt(0, 100, 100))
    assert not contains(example, pt(0, -1, 0))


def test_pseudo_vertices(example):
    pvs = pseudo_vertices(example)
    assert len(pvs) == 10
    assert pt(0, 3, 2) in pvs
    assert pt(1, 4, 0) in pvs
    # every generator is a pseudo-vertex here
    for v in example.points:
        assert v in pvs


def test_coords_from_type_round_trip(example):
    for w in pseudo_vertices(example):
        T = type_of(example, w)
        assert coords_from_type(example, T) == w


def test_coords_from_type_underdetermined(example):
    # the type of an interior point does not pin down a single point
    T = type_of(example, pt(0, 4, 2))
    with pytest.raises(PreconditionError):
        coords_from_type(example, T)


def test_tropical_vertices(example):
    assert tropical_vertex_indices(example) == [1, 2, 3, 4]
    assert tropical_vertices(example) == list(example.points)


def test_tropical_vertices_drop_interior_point():
    V = config([[0, 3, 6], [0, 5, 2], [0, 0, 1], [1, 5, 0], [0, 3, 2]])
    assert tropical_vertex_indices(V) == [1, 2, 3, 4]


def test_tropical_vertices_duplicates():
    V = config([[0, 1, 2], [1, 2, 3], [0, 5, 0]])
    # the first two rows are the same torus point; lowest index survives
    assert tropical_vertex_indices(V) == [1, 3]


def test_bounded_complex(example):
    bc = bounded_complex(example)
    assert bc.f_vector == (10, 12, 3)
    assert len(bc.maximal_cells) == 4
    dims = {len(cell) for cell in bc.maximal_cells}
    assert dims == {2, 3, 5}  # an edge, a triangle, two pentagons
    # maximal cells cover every pseudo-vertex
    covered = set().union(*map(set, bc.maximal_cells))
    assert covered == set(range(10))


def test_cell_type_rejects_non_face(example):
    bc = bounded_complex(example)
    with pytest.raises(PreconditionError):
        cell_type(example, bc, (0, 9))


def test_dual_subdivision_generic(example):
    cells = dual_subdivision(example)
    assert len(cells) == 10
    assert all(len(c) == example.n + example.d - 1 for c in cells)
    assert is_sufficiently_generic(example)


def test_non_generic_configuration():
    V = config([[0, 0, 0], [0, 0, 0], [0, 0, 0]])
    assert not is_sufficiently_generic(V)
    with pytest.raises(PreconditionError):
        polytope.triangulation_f_vector(V)
    cells = dual_subdivision(V)
    # single coarse cell: the whole product of simplices
    assert cells[0] == frozenset(
        (i, j) for i in (1, 2, 3) for j in (1, 2, 3)
    )


def test_corners(example):
    cs = corners(example)
    assert cs == [pt(1, 1, 0), pt(0, 5, 0), pt(0, 3, 6)]


def test_cornered_hull(example):
    hd, verts = cornered_hull(example)
    # the cornered hull contains all generators and all pseudo-vertices
    for w in pseudo_vertices(example):
        chart = w.affine_chart()
        for b, a in hd.inequalities:
            assert sum(x * y for x, y in zip(a, chart)) <= b


def test_halfspace_contains():
    h = TropicalHalfspace(pt(0, 3, 6), frozenset({3}))
    assert halfspace_contains(h, pt(0, 3, 6))
    assert halfspace_contains(h, pt(0, 0, 1))
    assert not halfspace_contains(h, pt(0, 4, 8))


def test_halfspace_inclusion_antisymmetric(example):
    hs = minimal_halfspaces(example)
    assert len(hs) == 5
    for a in hs:
        for b in hs:
            if a != b:
                assert not halfspace_included(a, b)


def test_minimal_halfspaces_cut_out_polytope(example):
    hs = minimal_halfspaces(example)
    probes = [
        pt(0, 3, 2), pt(0, 4, 1), pt(0, 100, 100), pt(0, -1, 0),
        pt(0, 3, 6), pt(1, 5, 0), pt(0, 0, 0), pt(0, 2, 3),
    ]
    for x in probes:
        inside = all(halfspace_contains(h, x) for h in hs)
        assert inside == contains(example, x)


def test_single_point_degenerate():
    V = config([[0, 2, 5]])
    assert pseudo_vertices(V) == [pt(0, 2, 5)]
    assert tropical_vertex_indices(V) == [1]
    assert contains(V, pt(0, 2, 5))
    assert not contains(V, pt(0, 0, 0))
    bc = bounded_complex(V)
    assert bc.f_vector == (1,)


def test_tropical_segment_collinear():
    # three points on one tropical segment: the middle one is redundant
    a, b = pt(0, 0, 0), pt(0, 4, 2)
    mid = pt(0, 2, 2)  # min(a + 2, b) coordinatewise
    V = config([a.coords, mid.coords, b.coords])
    assert contains(V, mid)
    assert tropical_vertex_indices(V) == [1, 3]
    bc = bounded_complex(V)
    assert len(bc.maximal_cells) == 2  # two ordinary segments


def test_translation_equivariance(example):
    t = pt(3, -1, 2)
    W = example.translate(t)
    shifted = {p.normalize() for p in
               (pt(*(a + b for a, b in zip(p.coords, t.coords)))
                for p in pseudo_vertices(example))}
    assert {p.normalize() for p in pseudo_vertices(W)} == shifted
    assert tropical_vertex_indices(W) == tropical_vertex_indices(example)
