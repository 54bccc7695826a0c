"""Tropical Pluecker vectors, matroid subdivisions, and tree metrics.

A point configuration extends to a height function on d-subsets of
[n+d] via tropical minors; that function induces a regular matroid
subdivision of the hypersimplex, and its rank-2 restrictions are tree
metrics after an affine normalization.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, FrozenSet, List, Optional, Sequence, Tuple

from . import linalg, polyhedra
from .points import PointConfiguration
from .rationals import ExtRat, INF, is_inf
from .polytope import PreconditionError

Subset = FrozenSet[int]


def tropical_identity(d: int) -> List[List[ExtRat]]:
    """Zeros on the diagonal, infinity off it."""
    return [
        [Fraction(0) if i == j else INF for j in range(d)] for i in range(d)
    ]


def extend_with_identity(V: PointConfiguration) -> List[List[ExtRat]]:
    """The d x (n+d) matrix with the points as columns, identity block last."""
    d, n = V.d, V.n
    ident = tropical_identity(d)
    return [
        [V.entry(i + 1, r + 1) for i in range(n)] + ident[r]
        for r in range(d)
    ]


@dataclass
class PlueckerVector:
    """Height function on d-subsets of a ground set, extended rationals."""

    rank: int
    ground: Tuple[int, ...]
    values: Dict[Subset, ExtRat]

    @property
    def size(self) -> int:
        return len(self.ground)

    def value(self, subset) -> ExtRat:
        return self.values[frozenset(subset)]

    def subsets(self) -> List[Tuple[int, ...]]:
        return sorted(tuple(sorted(s)) for s in self.values)


def pluecker_vector(V: PointConfiguration) -> PlueckerVector:
    """Tropical minors of the extended matrix, one per d-subset of [n+d]."""
    d, n = V.d, V.n
    vbar = extend_with_identity(V)
    values: Dict[Subset, ExtRat] = {}
    for S in itertools.combinations(range(1, n + d + 1), d):
        sub = [[vbar[r][c - 1] for c in S] for r in range(d)]
        values[frozenset(S)] = linalg.trop_det(sub).value
    p = PlueckerVector(d, tuple(range(1, n + d + 1)), values)
    ok, witness = check_pluecker(p)
    if not ok:
        raise AssertionError(
            f"internal invariant violated: three-term relation fails at {witness}"
        )
    return p


def check_pluecker(p: PlueckerVector):
    """Exhaustive three-term relation check.

    Returns (True, None) or (False, witness) where the witness is the
    (d-2)-subset plus the offending quadruple.  A minimum attained only
    by INF sums counts as attained by all of them.
    """
    ground = p.ground
    if p.rank < 2:
        return True, None  # the relations are vacuous below rank 2
    for T in itertools.combinations(ground, p.rank - 2):
        rest = [g for g in ground if g not in T]
        for quad in itertools.combinations(rest, 4):
            i, j, k, l = quad
            base = frozenset(T)
            sums = [
                _trop_sum(p.values[base | {i, j}], p.values[base | {k, l}]),
                _trop_sum(p.values[base | {i, k}], p.values[base | {j, l}]),
                _trop_sum(p.values[base | {i, l}], p.values[base | {j, k}]),
            ]
            finite = [s for s in sums if not is_inf(s)]
            if not finite:
                continue  # all INF: attained thrice by convention
            m = min(finite)
            if sum(1 for s in sums if s == m) < 2:
                return False, (T, quad)
    return True, None


def _trop_sum(a: ExtRat, b: ExtRat) -> ExtRat:
    return INF if is_inf(a) or is_inf(b) else a + b


def is_matroid(bases) -> bool:
    """Basis exchange axiom on a family of equal-size subsets."""
    family = {frozenset(b) for b in bases}
    if not family:
        return False
    sizes = {len(b) for b in family}
    if len(sizes) != 1:
        return False
    for A in family:
        for B in family:
            for a in A - B:
                if not any((A - {a}) | {b} in family for b in B - A):
                    return False
    return True


def matroid_subdivision(p: PlueckerVector) -> List[List[Tuple[int, ...]]]:
    """Maximal cells of the regular subdivision of the hypersimplex.

    Lifts each vertex e_S by the height p(S) (INF heights drop the
    vertex) and reads off the lower hull.  Every cell is verified to be
    a matroid; output cells are sorted lists of sorted bases.
    """
    ok, witness = check_pluecker(p)
    if not ok:
        raise PreconditionError(f"three-term relation fails at {witness}")
    ground = sorted(p.ground)
    pos = {g: idx for idx, g in enumerate(ground)}
    subsets = [s for s in sorted(p.values, key=sorted) if not is_inf(p.values[s])]
    points = []
    heights = []
    for s in subsets:
        v = [Fraction(0)] * len(ground)
        for g in s:
            v[pos[g]] = Fraction(1)
        points.append(tuple(v))
        heights.append(p.values[s])
    cells_idx = polyhedra.lower_hull_subdivision(points, heights)
    cells = []
    for cell in cells_idx:
        bases = sorted(tuple(sorted(subsets[i])) for i in cell)
        if not is_matroid(bases):
            raise AssertionError(
                "internal invariant violated: a cell fails the exchange axiom"
            )
        cells.append(bases)
    cells.sort()
    return cells


def contraction_restriction(p: PlueckerVector, i: int) -> PlueckerVector:
    """Restriction to the contraction facet x_i = 1: rank drops by one."""
    if p.rank < 2:
        raise PreconditionError("rank must be at least 2 to contract")
    if i not in p.ground:
        raise ValueError(f"{i} is not in the ground set")
    rest = tuple(g for g in p.ground if g != i)
    values = {
        frozenset(S): p.values[frozenset(S) | {i}]
        for S in itertools.combinations(rest, p.rank - 1)
    }
    return PlueckerVector(p.rank - 1, rest, values)


@dataclass
class MetricOnLeaves:
    """Symmetric rational distance function with zero diagonal."""

    leaves: Tuple[int, ...]
    dists: Dict[Subset, Fraction]

    def dist(self, x: int, y: int) -> Fraction:
        if x == y:
            return Fraction(0)
        return self.dists[frozenset((x, y))]


def metric_from_restriction(
    p2: PlueckerVector,
    offset: Optional[Fraction] = None,
    scale: Optional[Fraction] = None,
) -> MetricOnLeaves:
    """Affine normalization of a rank-2 vector into a metric.

    delta(j,k) = offset - p(jk)/scale.  Defaults squeeze all distances
    into [2, 3], which makes the triangle inequality automatic.
    """
    if p2.rank != 2:
        raise PreconditionError("need a rank-2 vector")
    vals = list(p2.values.values())
    if any(is_inf(v) for v in vals):
        raise PreconditionError("all values must be finite")
    offset, scale = _default_normalization(vals, offset, scale)
    dists = {}
    for S, v in p2.values.items():
        dval = offset - v / scale
        if dval <= 0:
            raise PreconditionError(
                f"normalization yields non-positive distance {dval} at {sorted(S)}"
            )
        dists[S] = dval
    return MetricOnLeaves(tuple(sorted(p2.ground)), dists)


def _default_normalization(vals, offset, scale):
    lo, hi = min(vals), max(vals)
    if scale is None:
        scale = hi - lo if hi > lo else Fraction(1)
    else:
        scale = Fraction(scale)
        if scale <= 0:
            raise ValueError("scale must be positive")
    if offset is None:
        offset = Fraction(2) + hi / scale
    else:
        offset = Fraction(offset)
    return offset, scale


def is_tree_metric(delta: MetricOnLeaves) -> bool:
    """Four-point condition on every quadruple of leaves."""
    if len(delta.leaves) < 3:
        raise PreconditionError("need at least three leaves")
    for quad in itertools.combinations(delta.leaves, 4):
        x, y, z, w = quad
        sums = sorted(
            [
                delta.dist(x, y) + delta.dist(z, w),
                delta.dist(x, z) + delta.dist(y, w),
                delta.dist(x, w) + delta.dist(y, z),
            ]
        )
        if sums[1] != sums[2]:
            return False
    return True


@dataclass
class WeightedTree:
    """Tree with rational edge lengths whose leaf metric is exact."""

    #: adjacency: node id -> {neighbor: length}
    adjacency: Dict[int, Dict[int, Fraction]] = field(default_factory=dict)
    leaf_node: Dict[int, int] = field(default_factory=dict)

    def _add_edge(self, a: int, b: int, length: Fraction):
        self.adjacency.setdefault(a, {})[b] = length
        self.adjacency.setdefault(b, {})[a] = length

    def _remove_edge(self, a: int, b: int):
        del self.adjacency[a][b]
        del self.adjacency[b][a]

    def path_lengths(self, x: int, y: int) -> List[Fraction]:
        """Edge lengths along the leaf-to-leaf path, in order."""
        start, goal = self.leaf_node[x], self.leaf_node[y]
        parent = {start: None}
        stack = [start]
        while stack:
            node = stack.pop()
            if node == goal:
                break
            for nb in self.adjacency[node]:
                if nb not in parent:
                    parent[nb] = node
                    stack.append(nb)
        path = []
        node = goal
        while parent[node] is not None:
            prev = parent[node]
            path.append(self.adjacency[prev][node])
            node = prev
        return list(reversed(path))

    def leaf_distance(self, x: int, y: int) -> Fraction:
        if x == y:
            return Fraction(0)
        return sum(self.path_lengths(x, y), Fraction(0))

    def edges(self) -> List[Tuple[int, int, Fraction]]:
        out = []
        for a, nbrs in self.adjacency.items():
            for b, length in nbrs.items():
                if a < b:
                    out.append((a, b, length))
        return sorted(out)


def tree_from_metric(delta: MetricOnLeaves) -> WeightedTree:
    """Exact tree realization by iterative leaf insertion.

    Each new leaf attaches to the path between the closest existing
    leaf pair; the final tree is checked to reproduce the metric exactly.
    """
    if not is_tree_metric(delta):
        raise PreconditionError("the four-point condition fails: not a tree metric")
    leaves = list(delta.leaves)
    tree = WeightedTree()
    counter = itertools.count()
    a = next(counter)
    tree.adjacency[a] = {}
    tree.leaf_node[leaves[0]] = a
    if len(leaves) > 1:
        b = next(counter)
        tree._add_edge(a, b, delta.dist(leaves[0], leaves[1]))
        tree.leaf_node[leaves[1]] = b
    placed = leaves[:2]
    for x in leaves[2:]:
        u, v = min(
            itertools.combinations(placed, 2),
            key=lambda pair: (
                delta.dist(pair[0], x) + delta.dist(pair[1], x)
                - delta.dist(pair[0], pair[1]),
                pair,
            ),
        )
        along = (delta.dist(u, x) + delta.dist(u, v) - delta.dist(v, x)) / 2
        pendant = delta.dist(u, x) - along
        attach = _split_path(tree, tree.leaf_node[u], tree.leaf_node[v],
                             along, counter)
        leaf = next(counter)
        tree._add_edge(attach, leaf, pendant)
        tree.leaf_node[x] = leaf
        placed.append(x)
    for x, y in itertools.combinations(leaves, 2):
        if tree.leaf_distance(x, y) != delta.dist(x, y):
            raise AssertionError(
                "internal invariant violated: realization does not match the metric"
            )
    return tree


def _split_path(tree: WeightedTree, start: int, goal: int,
                along: Fraction, counter) -> int:
    """Node at the given distance from start on the path to goal.

    Splits an edge when the position falls strictly inside it.
    """
    parent = {start: None}
    stack = [start]
    while stack:
        node = stack.pop()
        for nb in tree.adjacency[node]:
            if nb not in parent:
                parent[nb] = node
                stack.append(nb)
    path = [goal]
    while parent[path[-1]] is not None:
        path.append(parent[path[-1]])
    path.reverse()
    walked = Fraction(0)
    for prev, node in zip(path, path[1:]):
        step = tree.adjacency[prev][node]
        if walked + step > along:
            if walked == along:
                return prev
            mid = next(counter)
            tree._remove_edge(prev, node)
            tree._add_edge(prev, mid, along - walked)
            tree._add_edge(mid, node, walked + step - along)
            return mid
        walked += step
    return path[-1] if walked == along else path[0]


@dataclass
class TreeArrangement:
    """The n+3 contraction tree metrics of a planar configuration."""

    offset: Fraction
    scale: Fraction
    metrics: Dict[int, MetricOnLeaves]
    compatible: bool


def tree_arrangement(
    V: PointConfiguration,
    offset: Optional[Fraction] = None,
    scale: Optional[Fraction] = None,
) -> TreeArrangement:
    """One tree metric per contraction facet, with the compatibility check.

    Requires d = 3.  A single (offset, scale) pair is used for all
    restrictions so that delta_i(j,k) = delta_j(k,i) = delta_k(i,j)
    holds exactly.
    """
    if V.d != 3:
        raise PreconditionError("tree arrangements need d = 3")
    p = pluecker_vector(V)
    offset, scale = _default_normalization(list(p.values.values()), offset, scale)
    metrics = {}
    for i in p.ground:
        delta = metric_from_restriction(
            contraction_restriction(p, i), offset, scale
        )
        if not is_tree_metric(delta):
            raise AssertionError(
                "internal invariant violated: a restriction is not tree-like"
            )
        metrics[i] = delta
    compatible = True
    for i, j, k in itertools.combinations(p.ground, 3):
        if not (
            metrics[i].dist(j, k)
            == metrics[j].dist(k, i)
            == metrics[k].dist(i, j)
        ):
            compatible = False
    return TreeArrangement(offset, scale, metrics, compatible)
