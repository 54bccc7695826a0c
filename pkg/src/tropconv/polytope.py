"""Tropical polytopes: types, envelopes, vertices, duality, halfspaces.

The central object is the type decomposition induced by a generating
sequence V.  Pseudo-vertices come from an ordinary vertex enumeration of
the envelope; minimal tropical halfspaces from minimal set covers over
the type entries at each pseudo-vertex.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, FrozenSet, List, Optional, Sequence, Tuple

from .points import (
    DimensionMismatch,
    PointConfiguration,
    TropicalPoint,
    from_chart,
    sector_set,
)
from . import polyhedra
from .polyhedra import HDescription, VDescription

TypeVector = Tuple[FrozenSet[int], ...]


class PreconditionError(ValueError):
    """An operation was called outside its documented domain."""


def type_of(V: PointConfiguration, x: TropicalPoint) -> TypeVector:
    """Type of x: T_k collects the generators lying in x + closed sector k."""
    if x.dim != V.d:
        raise DimensionMismatch(f"point has dimension {x.dim}, expected {V.d}")
    entries = [set() for _ in range(V.d)]
    for i, v in enumerate(V.points, start=1):
        for k in sector_set(v, x):
            entries[k - 1].add(i)
    return tuple(frozenset(e) for e in entries)


def contains(V: PointConfiguration, x: TropicalPoint) -> bool:
    """Membership in tconv V: all type entries non-empty."""
    return all(type_of(V, x))


@dataclass
class Envelope:
    """The envelope polyhedron in the chart y_1 = 0.

    Variables are (y_2, ..., y_n, z_1, ..., z_d); one inequality
    y_i + z_j <= v_ij per matrix entry.
    """

    n: int
    d: int
    hdesc: HDescription
    vdesc: VDescription

    def vertex_projection(self, vertex_index: int) -> TropicalPoint:
        """Project an envelope vertex (y, z) to z."""
        coords = self.vdesc.vertices[vertex_index][self.n - 1:]
        return TropicalPoint(coords)


def envelope(V: PointConfiguration) -> Envelope:
    n, d = V.n, V.d
    nvars = (n - 1) + d
    ineqs = []
    for i in range(1, n + 1):
        for j in range(1, d + 1):
            a = [Fraction(0)] * nvars
            if i > 1:
                a[i - 2] = Fraction(1)  # y_i
            a[n - 1 + j - 1] = Fraction(1)  # z_j
            ineqs.append((V.entry(i, j), tuple(a)))
    hdesc = HDescription.build(nvars, ineqs)
    vdesc = polyhedra.dd_enumerate(hdesc)
    return Envelope(n, d, hdesc, vdesc)


def pseudo_vertices(V: PointConfiguration) -> List[TropicalPoint]:
    """Vertices of the envelope projected to z, deduplicated and sorted."""
    env = envelope(V)
    seen = {}
    for k in range(len(env.vdesc.vertices)):
        p = env.vertex_projection(k)
        seen[p] = p
    return sorted(seen.values(), key=lambda p: p.normalize().coords)


def coords_from_type(V: PointConfiguration, T: Sequence[FrozenSet[int]]) -> TropicalPoint:
    """Recover a pseudo-vertex from its type.

    Fixes w_1 = 0 and propagates the tight equations
    w_k - w_j = v_ik - v_ij for generators i listed in both entries.
    Raises when the system is underdetermined or inconsistent.
    """
    d = V.d
    if len(T) != d:
        raise DimensionMismatch("type vector has wrong length")
    coords: List[Optional[Fraction]] = [None] * d
    coords[0] = Fraction(0)
    # edges (j, k, delta) meaning w_k - w_j = delta
    edges: List[Tuple[int, int, Fraction]] = []
    for i in range(1, V.n + 1):
        members = [j for j in range(1, d + 1) if i in T[j - 1]]
        for j, k in itertools.combinations(members, 2):
            edges.append((j, k, V.entry(i, k) - V.entry(i, j)))
    changed = True
    while changed:
        changed = False
        for j, k, delta in edges:
            cj, ck = coords[j - 1], coords[k - 1]
            if cj is not None and ck is None:
                coords[k - 1] = cj + delta
                changed = True
            elif ck is not None and cj is None:
                coords[j - 1] = ck - delta
                changed = True
            elif cj is not None and ck is not None and ck - cj != delta:
                raise PreconditionError("inconsistent type: no point realizes it")
    if any(c is None for c in coords):
        raise PreconditionError(
            "underdetermined type: it does not pin down a single point"
        )
    return TropicalPoint(coords)


def tropical_vertex_indices(V: PointConfiguration) -> List[int]:
    """1-based indices of the unique minimal generating set.

    Duplicated generators keep their lowest index; a generator survives
    iff its type with respect to the remaining ones has an empty entry.
    """
    survivors: List[int] = []
    for i, p in enumerate(V.points):
        if any(V.points[j] == p for j in survivors):
            continue
        survivors.append(i)
    result = []
    for i in survivors:
        others = [V.points[j] for j in survivors if j != i]
        if not others:
            result.append(i + 1)
            continue
        T = type_of(PointConfiguration(others), V.points[i])
        if any(not entry for entry in T):
            result.append(i + 1)
    return result


def tropical_vertices(V: PointConfiguration) -> List[TropicalPoint]:
    """The unique minimal generating set, in the original order."""
    return [V.points[i - 1] for i in tropical_vertex_indices(V)]


@dataclass
class BoundedComplex:
    """Bounded cells of the type decomposition, graded by dimension."""

    pseudo_vertices: List[TropicalPoint]
    #: dimension -> list of cells, each a sorted tuple of pseudo-vertex indices
    faces: Dict[int, List[Tuple[int, ...]]]
    maximal_cells: List[Tuple[int, ...]]
    f_vector: Tuple[int, ...]

    def cell_points(self, cell: Sequence[int]) -> List[TropicalPoint]:
        return [self.pseudo_vertices[i] for i in cell]


def bounded_complex(V: PointConfiguration) -> BoundedComplex:
    """Bounded faces of the envelope, pushed down to the tropical torus."""
    env = envelope(V)
    pvs = pseudo_vertices(V)
    index_of = {p: k for k, p in enumerate(pvs)}
    projected = [
        index_of[env.vertex_projection(k)]
        for k in range(len(env.vdesc.vertices))
    ]
    graded_env = polyhedra.bounded_faces(env.vdesc)
    faces: Dict[int, List[Tuple[int, ...]]] = {}
    seen = set()
    for env_faces in graded_env.values():
        for face in env_faces:
            cell = tuple(sorted({projected[k] for k in face}))
            if cell in seen:
                continue
            seen.add(cell)
            charts = [pvs[i].affine_chart() for i in cell]
            dim = polyhedra._affine_rank(charts)
            faces.setdefault(dim, []).append(cell)
    for cells in faces.values():
        cells.sort()
    top = max(faces)
    fvec = tuple(len(faces.get(k, [])) for k in range(top + 1))
    maximal = []
    all_cells = [c for cells in faces.values() for c in cells]
    for c in all_cells:
        cset = set(c)
        if not any(cset < set(other) for other in all_cells):
            maximal.append(c)
    maximal.sort()
    return BoundedComplex(pvs, faces, maximal, fvec)


def cell_type(
    V: PointConfiguration,
    complex_: BoundedComplex,
    cell: Sequence[int],
) -> TypeVector:
    """Type of the relative interior of a bounded cell (via its barycenter)."""
    key = tuple(sorted(cell))
    if all(key not in cells for cells in complex_.faces.values()):
        raise PreconditionError(f"{key} is not a face of the bounded complex")
    charts = [complex_.pseudo_vertices[i].affine_chart() for i in key]
    k = len(charts)
    bary = tuple(sum(col, Fraction(0)) / k for col in zip(*charts))
    return type_of(V, from_chart(bary))


DualCell = FrozenSet[Tuple[int, int]]


def dual_subdivision(V: PointConfiguration) -> List[DualCell]:
    """Maximal cells of the dual regular subdivision of a product of simplices.

    One cell per pseudo-vertex: the vertices (e_i, e_j) with i in T_j.
    """
    cells = []
    for w in pseudo_vertices(V):
        T = type_of(V, w)
        cells.append(
            frozenset((i, j) for j in range(1, V.d + 1) for i in T[j - 1])
        )
    return cells


def is_sufficiently_generic(V: PointConfiguration) -> bool:
    """Triangulation criterion, cross-checked against envelope simplicity."""
    cells = dual_subdivision(V)
    triangulation = all(len(c) == V.n + V.d - 1 for c in cells)
    env = envelope(V)
    simple = polyhedra.is_simple(env.vdesc)
    if triangulation != simple:
        raise AssertionError(
            "internal invariant violated: triangulation and simplicity disagree"
        )
    return triangulation


def triangulation_f_vector(V: PointConfiguration) -> Tuple[int, ...]:
    """f-vector of the dual triangulation as a simplicial complex."""
    if not is_sufficiently_generic(V):
        raise PreconditionError("configuration is not sufficiently generic")
    cells = dual_subdivision(V)
    faces = set()
    for cell in cells:
        members = sorted(cell)
        for r in range(1, len(members) + 1):
            faces.update(itertools.combinations(members, r))
    top = max(len(f) for f in faces)
    return tuple(
        sum(1 for f in faces if len(f) == r) for r in range(1, top + 1)
    )


def alexander_dual_generators(V: PointConfiguration) -> List[DualCell]:
    """Complements of the maximal dual cells: generators of the dual ideal."""
    if not is_sufficiently_generic(V):
        raise PreconditionError("configuration is not sufficiently generic")
    grid = frozenset(
        (i, j) for i in range(1, V.n + 1) for j in range(1, V.d + 1)
    )
    return [grid - cell for cell in dual_subdivision(V)]


def corner(V: PointConfiguration, k: int) -> TropicalPoint:
    """k-th corner: tropical combination with weights -v_ik (1-based k)."""
    if not 1 <= k <= V.d:
        raise ValueError(f"corner index {k} out of range 1..{V.d}")
    coords = [
        min(V.entry(i, j) - V.entry(i, k) for i in range(1, V.n + 1))
        for j in range(1, V.d + 1)
    ]
    return TropicalPoint(coords)


def corners(V: PointConfiguration) -> List[TropicalPoint]:
    return [corner(V, k) for k in range(1, V.d + 1)]


@dataclass(frozen=True)
class TropicalHalfspace:
    """Closed tropical halfspace (apex, sector set), 1-based sectors."""

    apex: TropicalPoint
    sectors: FrozenSet[int]

    def __post_init__(self):
        d = self.apex.dim
        if not (1 <= len(self.sectors) <= d - 1):
            raise ValueError("sector set must be a nonempty proper subset")
        if not all(1 <= k <= d for k in self.sectors):
            raise ValueError("sector index out of range")


def halfspace_contains(h: TropicalHalfspace, x: TropicalPoint) -> bool:
    return bool(sector_set(x, h.apex) & h.sectors)


def halfspace_included(h1: TropicalHalfspace, h2: TropicalHalfspace) -> bool:
    """Inclusion test: sectors nest and the apex offset is compatible.

    (a,H) sits inside (b,K) iff H is a subset of K and
    max_{i in H} (a-b)_i <= min_{j not in K} (a-b)_j.
    """
    if h1.apex.dim != h2.apex.dim:
        raise DimensionMismatch("halfspaces live in different dimensions")
    d = h1.apex.dim
    if not h1.sectors <= h2.sectors:
        return False
    diff = [
        x - y for x, y in zip(h1.apex.coords, h2.apex.coords)
    ]
    lhs = max(diff[i - 1] for i in h1.sectors)
    rhs = min(diff[j - 1] for j in range(1, d + 1) if j not in h2.sectors)
    return lhs <= rhs


def local_minimal_halfspaces(
    V: PointConfiguration, x: TropicalPoint
) -> List[TropicalHalfspace]:
    """Locally minimal halfspaces at apex x: minimal sector covers of [n].

    Enumerates inclusion-minimal H with union of the type entries over H
    equal to [n]; the full sector set [d] never yields a halfspace.
    """
    if not contains(V, x):
        raise PreconditionError("apex must lie in the tropical polytope")
    T = type_of(V, x)
    d = V.d
    ground = frozenset(range(1, V.n + 1))
    covers = []
    for r in range(1, d):
        for H in itertools.combinations(range(1, d + 1), r):
            union = frozenset().union(*(T[j - 1] for j in H))
            if union == ground:
                covers.append(frozenset(H))
    minimal = [
        H for H in covers if not any(H2 < H for H2 in covers)
    ]
    minimal.sort(key=sorted)
    return [TropicalHalfspace(x, H) for H in minimal]


def minimal_halfspaces(V: PointConfiguration) -> List[TropicalHalfspace]:
    """All minimal tropical halfspaces of tconv V.

    Locally minimal halfspaces at every pseudo-vertex, filtered by
    pairwise inclusion.
    """
    candidates: List[TropicalHalfspace] = []
    for w in pseudo_vertices(V):
        candidates.extend(local_minimal_halfspaces(V, w))
    result = []
    for h in candidates:
        dominated = any(
            other is not h
            and halfspace_included(other, h)
            and not (other.apex == h.apex and other.sectors == h.sectors)
            for other in candidates
        )
        if not dominated and not any(
            h.apex == r.apex and h.sectors == r.sectors for r in result
        ):
            result.append(h)
    result.sort(key=lambda h: (h.apex.normalize().coords, sorted(h.sectors)))
    return result


def cornered_hull(
    V: PointConfiguration,
) -> Tuple[HDescription, List[TropicalPoint]]:
    """Smallest polytrope containing V, as an ordinary polytope in the chart.

    Intersection of the d cornered halfspaces; returns the chart
    H-description together with its vertex set.
    """
    d = V.d
    cs = corners(V)
    ineqs = []
    # (c, {k}) reads x_k - x_j <= c_k - c_j for all j; chart fixes x_1 = 0
    for k in range(1, d + 1):
        c = cs[k - 1]
        for j in range(1, d + 1):
            if j == k:
                continue
            a = [Fraction(0)] * (d - 1)
            if k > 1:
                a[k - 2] += 1
            if j > 1:
                a[j - 2] -= 1
            ineqs.append((c.coords[k - 1] - c.coords[j - 1], tuple(a)))
    hdesc = HDescription.build(d - 1, ineqs)
    vdesc = polyhedra.dd_enumerate(hdesc)
    verts = sorted(
        {from_chart(v) for v in vdesc.vertices},
        key=lambda p: p.normalize().coords,
    )
    return hdesc, verts
