"""Randomized invariants, mostly driven by hypothesis."""

from fractions import Fraction

from hypothesis import given, settings
from hypothesis import strategies as st

from tropconv import grassmann, linalg, polytope
from tropconv.points import PointConfiguration, TropicalPoint
from tropconv.rationals import INF, trop_add, trop_mul

rationals = st.fractions(
    min_value=-6, max_value=6, max_denominator=4
)
scalars = st.one_of(rationals, st.just(INF))


def configs(min_n=1, max_n=6, min_d=2, max_d=4):
    return st.integers(min_d, max_d).flatmap(
        lambda d: st.lists(
            st.lists(rationals, min_size=d, max_size=d),
            min_size=min_n,
            max_size=max_n,
        ).map(PointConfiguration)
    )


@given(scalars, scalars, scalars)
def test_semiring_laws(a, b, c):
    assert trop_add(a, b) == trop_add(b, a)
    assert trop_add(trop_add(a, b), c) == trop_add(a, trop_add(b, c))
    assert trop_mul(a, b) == trop_mul(b, a)
    assert trop_mul(trop_mul(a, b), c) == trop_mul(a, trop_mul(b, c))
    # distributivity and the neutral elements
    assert trop_mul(a, trop_add(b, c)) == trop_add(
        trop_mul(a, b), trop_mul(a, c)
    )
    assert trop_add(a, INF) == a
    assert trop_mul(a, Fraction(0)) == a


@given(st.lists(rationals, min_size=2, max_size=5))
def test_normalize_idempotent(coords):
    p = TropicalPoint(coords).normalize()
    assert p.normalize() == p
    assert min(p.coords) == 0


@given(st.lists(rationals, min_size=2, max_size=5), rationals)
def test_shift_is_identity_on_torus(coords, t):
    p = TropicalPoint(coords)
    assert p.shift(t) == p


def configs_with_shift(max_n=5, max_d=3):
    return st.integers(2, max_d).flatmap(
        lambda d: st.tuples(
            st.lists(
                st.lists(rationals, min_size=d, max_size=d),
                min_size=1,
                max_size=max_n,
            ).map(PointConfiguration),
            st.lists(rationals, min_size=d, max_size=d).map(TropicalPoint),
        )
    )


@settings(max_examples=100, deadline=None)
@given(configs_with_shift())
def test_translation_equivariance(case):
    V, shift = case
    W = V.translate(shift)

    def translated(points):
        return sorted(
            TropicalPoint(
                a + b for a, b in zip(p.coords, shift.coords)
            ).normalize().coords
            for p in points
        )

    assert (
        sorted(q.normalize().coords for q in polytope.pseudo_vertices(W))
        == translated(polytope.pseudo_vertices(V))
    )
    assert polytope.tropical_vertex_indices(W) == (
        polytope.tropical_vertex_indices(V)
    )
    assert (
        sorted(q.normalize().coords for q in polytope.corners(W))
        == translated(polytope.corners(V))
    )


@settings(max_examples=100, deadline=None)
@given(configs(min_n=1, max_n=4, min_d=2, max_d=3), rationals,
       st.integers(1, 3))
def test_pluecker_height_invariance(V, shift, scaling):
    """Affine shifts and positive scalings of the heights leave the
    matroid subdivision unchanged."""
    p = grassmann.pluecker_vector(V)
    base = {frozenset(map(frozenset, cell))
            for cell in grassmann.matroid_subdivision(p)}
    moved = grassmann.PlueckerVector(
        p.rank,
        p.ground,
        {S: v * scaling + shift for S, v in p.values.items()},
    )
    assert {frozenset(map(frozenset, cell))
            for cell in grassmann.matroid_subdivision(moved)} == base


@settings(max_examples=100, deadline=None)
@given(configs(max_n=5, max_d=3))
def test_type_round_trip_on_pseudo_vertices(V):
    for w in polytope.pseudo_vertices(V):
        T = polytope.type_of(V, w)
        assert polytope.coords_from_type(V, T) == w


@settings(max_examples=100, deadline=None)
@given(configs(max_n=5, max_d=3))
def test_minimal_halfspaces_form_antichain(V):
    hs = polytope.minimal_halfspaces(V)
    for a in hs:
        for b in hs:
            if a != b:
                assert not polytope.halfspace_included(a, b)
                assert not polytope.halfspace_included(b, a)


@settings(max_examples=100, deadline=None)
@given(configs(max_n=5, max_d=3))
def test_halfspaces_contain_generators(V):
    for h in polytope.minimal_halfspaces(V):
        for v in V.points:
            assert polytope.halfspace_contains(h, v)


@settings(max_examples=100, deadline=None)
@given(configs(min_n=2, max_n=3, min_d=2, max_d=3))
def test_contraction_facet_coherence(V):
    """Restricting the subdivision to a contraction facet gives the
    subdivision of the restriction."""
    p = grassmann.pluecker_vector(V)
    cells = grassmann.matroid_subdivision(p)
    for i in p.ground:
        pi = grassmann.contraction_restriction(p, i)
        expected = {
            frozenset(map(frozenset, cell))
            for cell in grassmann.matroid_subdivision(pi)
        }
        induced = set()
        for cell in cells:
            cut = frozenset(
                frozenset(set(b) - {i}) for b in cell if i in set(b)
            )
            if cut:
                induced.add(cut)
        maximal = {
            c for c in induced if not any(c < other for other in induced)
        }
        assert maximal == expected


@settings(max_examples=100, deadline=None)
@given(configs(max_n=5, max_d=3))
def test_pseudo_vertices_lie_in_polytope(V):
    for w in polytope.pseudo_vertices(V):
        assert polytope.contains(V, w)


@settings(max_examples=60, deadline=None)
@given(st.integers(2, 4).flatmap(
    lambda d: st.lists(
        st.lists(rationals, min_size=d, max_size=d),
        min_size=d, max_size=d,
    )
))
def test_det_agrees_with_brute_force(rows):
    assert linalg.trop_det(rows).value == linalg.trop_det_brute(rows).value
