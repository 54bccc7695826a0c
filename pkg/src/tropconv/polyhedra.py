"""Exact rational polyhedra: double description, faces, lower hulls.

One verified kernel (``dd_cone``) drives everything: vertex/ray
enumeration from inequalities, facet enumeration from generators (via the
valid-inequality cone), bounded-face enumeration, and regular
subdivisions from lifted point sets.  All arithmetic is over Fraction.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from typing import Dict, FrozenSet, List, Optional, Sequence, Tuple

Vector = Tuple[Fraction, ...]


class EmptyPolyhedronError(ValueError):
    """The inequality system has no solution."""


class NotPointedError(ValueError):
    """The polyhedron contains an affine line; no vertex description exists."""


# ---------------------------------------------------------------------------
# small exact linear algebra


def _vec(xs) -> Vector:
    return tuple(Fraction(x) for x in xs)


def _dot(a: Sequence[Fraction], b: Sequence[Fraction]) -> Fraction:
    return sum((x * y for x, y in zip(a, b)), Fraction(0))


def _rref(rows: List[List[Fraction]]) -> Tuple[List[List[Fraction]], List[int]]:
    """Reduced row echelon form; returns (matrix, pivot column indices)."""
    mat = [list(r) for r in rows]
    pivots: List[int] = []
    r = 0
    ncols = len(mat[0]) if mat else 0
    for c in range(ncols):
        pivot_row = None
        for i in range(r, len(mat)):
            if mat[i][c] != 0:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        mat[r], mat[pivot_row] = mat[pivot_row], mat[r]
        pv = mat[r][c]
        mat[r] = [x / pv for x in mat[r]]
        for i in range(len(mat)):
            if i != r and mat[i][c] != 0:
                f = mat[i][c]
                mat[i] = [x - f * y for x, y in zip(mat[i], mat[r])]
        pivots.append(c)
        r += 1
        if r == len(mat):
            break
    return mat, pivots


def _rank(rows: Sequence[Sequence[Fraction]]) -> int:
    rows = [list(r) for r in rows if any(x != 0 for x in r)]
    if not rows:
        return 0
    _, pivots = _rref(rows)
    return len(pivots)


def _nullspace(rows: Sequence[Sequence[Fraction]], dim: int) -> List[Vector]:
    """Basis of {x : rows @ x = 0} in R^dim."""
    rows = [list(r) for r in rows if any(x != 0 for x in r)]
    if not rows:
        return [
            tuple(Fraction(1 if i == j else 0) for i in range(dim))
            for j in range(dim)
        ]
    mat, pivots = _rref(rows)
    free = [c for c in range(dim) if c not in pivots]
    basis = []
    for fc in free:
        v = [Fraction(0)] * dim
        v[fc] = Fraction(1)
        for pr, pc in enumerate(pivots):
            v[pc] = -mat[pr][fc]
        basis.append(tuple(v))
    return basis


def _primitive(v: Vector) -> Vector:
    """Scale a nonzero vector by a positive rational to primitive integers."""
    denom_lcm = 1
    for x in v:
        denom_lcm = denom_lcm * x.denominator // gcd(denom_lcm, x.denominator)
    ints = [x.numerator * (denom_lcm // x.denominator) for x in v]
    g = 0
    for x in ints:
        g = gcd(g, abs(x))
    if g == 0:
        raise ValueError("zero vector has no primitive form")
    return tuple(Fraction(x // g) for x in ints)


def _affine_rank(points: Sequence[Vector]) -> int:
    """Dimension of the affine hull of a point set (-1 for empty)."""
    if not points:
        return -1
    p0 = points[0]
    diffs = [[a - b for a, b in zip(p, p0)] for p in points[1:]]
    return _rank(diffs)


# ---------------------------------------------------------------------------
# double description kernel


def dd_cone(ineq_rows: Sequence[Sequence[Fraction]],
            eq_rows: Sequence[Sequence[Fraction]],
            dim: int) -> List[Vector]:
    """Extreme rays of the pointed cone {x : M x >= 0, E x = 0}.

    Fukuda-Prodon style: rows inserted in the given (lexicographic) order,
    adjacency decided combinatorially via zero-set inclusion.  Raises
    NotPointedError when the cone contains a line.
    """
    ineq_rows = [_vec(r) for r in ineq_rows]
    eq_rows = [_vec(r) for r in eq_rows]

    # restrict to the solution space of the equations
    basis = _nullspace(eq_rows, dim) if eq_rows else None
    if basis is not None:
        k = len(basis)
        if k == 0:
            return []
        reduced = [
            tuple(_dot(row, b) for b in basis) for row in ineq_rows
        ]
    else:
        k = dim
        reduced = ineq_rows

    if _rank(reduced) < k:
        raise NotPointedError("cone contains a line (lineality space detected)")

    # initial simplicial cone from the lexicographically first basis of rows
    chosen: List[int] = []
    rows_so_far: List[List[Fraction]] = []
    for idx, row in enumerate(reduced):
        if _rank(rows_so_far + [list(row)]) > len(chosen):
            chosen.append(idx)
            rows_so_far.append(list(row))
        if len(chosen) == k:
            break
    binv = _invert([list(reduced[i]) for i in chosen])
    rays: List[Vector] = [
        _primitive(tuple(binv[r][c] for r in range(k))) for c in range(k)
    ]
    # zero sets are bitmasks over the insertion-ordered constraint list
    order = chosen + [i for i in range(len(reduced)) if i not in chosen]
    zsets: List[int] = []
    for c in range(k):
        z = 0
        for pos in range(k):
            if pos != c:
                z |= 1 << pos
        zsets.append(z)

    for pos in range(k, len(order)):
        row = reduced[order[pos]]
        vals = [_dot(row, r) for r in rays]
        pos_i = [i for i, v in enumerate(vals) if v > 0]
        zer_i = [i for i, v in enumerate(vals) if v == 0]
        neg_i = [i for i, v in enumerate(vals) if v < 0]
        if not neg_i:
            for i in zer_i:
                zsets[i] |= 1 << pos
            continue
        new_rays: List[Vector] = []
        new_zsets: List[int] = []
        for ip in pos_i:
            for im in neg_i:
                z = zsets[ip] & zsets[im]
                if bin(z).count("1") < k - 2:
                    continue
                if any(
                    t != ip and t != im and (zsets[t] & z) == z
                    for t in range(len(rays))
                ):
                    continue
                combo = tuple(
                    vals[ip] * rn - vals[im] * rp
                    for rp, rn in zip(rays[ip], rays[im])
                )
                new_rays.append(_primitive(combo))
                new_zsets.append(z | (1 << pos))
        keep = pos_i + zer_i
        rays = [rays[i] for i in keep] + new_rays
        zsets = [
            zsets[i] | ((1 << pos) if vals[i] == 0 else 0) for i in keep
        ] + new_zsets

    if basis is not None:
        rays = [
            _primitive(
                tuple(
                    sum((t * b[j] for t, b in zip(ray, basis)), Fraction(0))
                    for j in range(dim)
                )
            )
            for ray in rays
        ]
    return rays


def _invert(mat: List[List[Fraction]]) -> List[List[Fraction]]:
    n = len(mat)
    aug = [list(row) + [Fraction(1 if i == j else 0) for j in range(n)]
           for i, row in enumerate(mat)]
    red, pivots = _rref(aug)
    if pivots != list(range(n)):
        raise ValueError("matrix is singular")
    return [row[n:] for row in red]


# ---------------------------------------------------------------------------
# H- and V-descriptions


@dataclass(frozen=True)
class HDescription:
    """Inequalities A x <= b and equations C x = d, rows stored as (b, A)."""

    dim: int
    inequalities: Tuple[Tuple[Fraction, Vector], ...]
    equations: Tuple[Tuple[Fraction, Vector], ...] = ()

    @staticmethod
    def build(dim: int, inequalities, equations=()) -> "HDescription":
        ineqs = tuple((Fraction(b), _vec(a)) for b, a in inequalities)
        eqs = tuple((Fraction(d0), _vec(c)) for d0, c in equations)
        for _, a in ineqs:
            if len(a) != dim:
                raise ValueError("inequality width mismatch")
        for _, c in eqs:
            if len(c) != dim:
                raise ValueError("equation width mismatch")
        return HDescription(dim, ineqs, eqs)


@dataclass
class VDescription:
    """Minimal generators of a pointed polyhedron, with incidences."""

    dim: int
    vertices: List[Vector]
    rays: List[Vector]
    hdesc: HDescription
    #: for each inequality: (tight vertex indices, tight ray indices)
    incidences: List[Tuple[FrozenSet[int], FrozenSet[int]]] = field(
        default_factory=list
    )

    def tight_sets(self) -> Tuple[List[FrozenSet[int]], List[FrozenSet[int]]]:
        """Per-generator sets of tight inequality indices (vertices, rays)."""
        vt = [frozenset(
            i for i, (tv, _) in enumerate(self.incidences) if k in tv
        ) for k in range(len(self.vertices))]
        rt = [frozenset(
            i for i, (_, tr) in enumerate(self.incidences) if k in tr
        ) for k in range(len(self.rays))]
        return vt, rt

    def dimension(self) -> int:
        homog = [(Fraction(1),) + v for v in self.vertices]
        homog += [(Fraction(0),) + r for r in self.rays]
        return _rank(homog) - 1


def dd_enumerate(h: HDescription) -> VDescription:
    """Vertices and rays of a pointed, nonempty polyhedron, exactly.

    Raises EmptyPolyhedronError / NotPointedError otherwise.  Output is
    sorted lexicographically; rays are primitive integer vectors.
    """
    rows = [(b,) + tuple(-x for x in a) for b, a in h.inequalities]
    rows.append((Fraction(1),) + tuple(Fraction(0) for _ in range(h.dim)))
    eqs = [(d0,) + tuple(-x for x in c) for d0, c in h.equations]
    cone_rays = dd_cone(rows, eqs, h.dim + 1)

    vertices: List[Vector] = []
    rays: List[Vector] = []
    for r in cone_rays:
        x0, rest = r[0], r[1:]
        if x0 > 0:
            vertices.append(tuple(x / x0 for x in rest))
        else:
            rays.append(_primitive(rest))
    if not vertices:
        raise EmptyPolyhedronError("no vertex: the polyhedron is empty")
    vertices.sort()
    rays.sort()

    incidences = []
    for b, a in h.inequalities:
        tv = frozenset(
            i for i, v in enumerate(vertices) if _dot(a, v) == b
        )
        tr = frozenset(
            i for i, r in enumerate(rays) if _dot(a, r) == 0
        )
        incidences.append((tv, tr))
    return VDescription(h.dim, vertices, rays, h, incidences)


def facets_from_generators(
    points: Sequence[Vector],
    rays: Sequence[Vector] = (),
) -> HDescription:
    """Irredundant H-description of conv(points) + cone(rays).

    Works via the cone of valid inequalities; the affine hull shows up as
    lineality there and is returned as equations.
    """
    points = [_vec(p) for p in points]
    rays = [_vec(r) for r in rays]
    if not points:
        raise ValueError("need at least one point")
    dim = len(points[0])
    rows = [(Fraction(1),) + tuple(-x for x in p) for p in points]
    rows += [(Fraction(0),) + tuple(-x for x in r) for r in rays]
    lineality = _nullspace(rows, dim + 1)
    cone_rays = dd_cone(rows, lineality, dim + 1)
    ineqs = []
    for y in cone_rays:
        b, a = y[0], y[1:]
        if all(x == 0 for x in a):
            continue  # the constant inequality 0 <= b
        ineqs.append((b, a))
    ineqs.sort()
    eqs = []
    for ell in lineality:
        b, a = ell[0], ell[1:]
        if any(x != 0 for x in a):
            eqs.append((b, a))
    eqs.sort()
    return HDescription.build(dim, ineqs, eqs)


# ---------------------------------------------------------------------------
# faces


def bounded_faces(v: VDescription) -> Dict[int, List[FrozenSet[int]]]:
    """All faces containing no ray, as vertex index sets grouped by dimension.

    Closure of vertex subsets under intersection of tight inequality
    sets; includes the maximal bounded faces and all their subfaces (for
    a polytope this includes the polytope itself).
    """
    nv = len(v.vertices)
    vt, rt = v.tight_sets()
    all_ineq = frozenset(range(len(v.incidences)))

    def closure(vset: FrozenSet[int]) -> Optional[FrozenSet[int]]:
        tight = all_ineq
        for i in vset:
            tight &= vt[i]
        if any(rt[k] >= tight for k in range(len(v.rays))):
            return None  # smallest containing face is unbounded
        return frozenset(i for i in range(nv) if vt[i] >= tight)

    seen = set()
    queue: List[FrozenSet[int]] = []
    for i in range(nv):
        f = closure(frozenset([i]))
        if f is not None and f not in seen:
            seen.add(f)
            queue.append(f)
    while queue:
        face = queue.pop()
        for w in range(nv):
            if w in face:
                continue
            bigger = closure(face | {w})
            if bigger is not None and bigger not in seen:
                seen.add(bigger)
                queue.append(bigger)

    graded: Dict[int, List[FrozenSet[int]]] = {}
    for face in seen:
        d = _affine_rank([v.vertices[i] for i in face])
        graded.setdefault(d, []).append(face)
    for faces in graded.values():
        faces.sort(key=lambda f: sorted(f))
    return graded


def f_vector(graded: Dict[int, List[FrozenSet[int]]]) -> Tuple[int, ...]:
    if not graded:
        return ()
    top = max(graded)
    return tuple(len(graded.get(d, [])) for d in range(top + 1))


def facet_incidences(v: VDescription) -> List[Tuple[FrozenSet[int], FrozenSet[int]]]:
    """Incidences restricted to facet-defining inequalities, deduplicated."""
    dim = v.dimension()
    seen = set()
    out = []
    for tv, tr in v.incidences:
        homog = [(Fraction(1),) + v.vertices[i] for i in tv]
        homog += [(Fraction(0),) + v.rays[k] for k in tr]
        if _rank(homog) != dim:
            continue  # not a facet (redundant or lower-dimensional)
        key = (tv, tr)
        if key in seen:
            continue
        seen.add(key)
        out.append((tv, tr))
    return out


def is_simple(v: VDescription, dim: Optional[int] = None) -> bool:
    """True iff every vertex lies on exactly dim facets."""
    if dim is None:
        dim = v.dimension()
    facets = facet_incidences(v)
    for k in range(len(v.vertices)):
        count = sum(1 for tv, _ in facets if k in tv)
        if count != dim:
            return False
    return True


# ---------------------------------------------------------------------------
# regular subdivisions


def lower_hull_subdivision(
    points: Sequence[Sequence[Fraction]],
    heights: Sequence[Fraction],
) -> List[FrozenSet[int]]:
    """Maximal cells of the regular subdivision induced by the heights.

    Lifts point i to (p_i, h_i), takes the hull plus the upward ray, and
    projects the facets whose outer normal points down.  A flat lift (or
    affinely dependent input) yields the single trivial cell.
    """
    pts = [_vec(p) for p in points]
    hts = [Fraction(h) for h in heights]
    if len(pts) != len(hts):
        raise ValueError("points and heights differ in length")
    if len(set(pts)) != len(pts):
        raise ValueError("points must be distinct")
    if len(pts) == 1:
        return [frozenset([0])]
    lifted = [p + (h,) for p, h in zip(pts, hts)]
    up = tuple(Fraction(0) for _ in pts[0]) + (Fraction(1),)
    hdesc = facets_from_generators(lifted, rays=[up])
    cells = []
    for b, a in hdesc.inequalities:
        if a[-1] >= 0:
            continue  # vertical or upper facet
        cell = frozenset(
            i for i, q in enumerate(lifted) if _dot(a, q) == b
        )
        cells.append(cell)
    if not cells:
        return [frozenset(range(len(pts)))]
    cells.sort(key=sorted)
    return cells
