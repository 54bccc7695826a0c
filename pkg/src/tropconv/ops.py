"""Command implementations shared by the CLI and the HTTP service.

Every operation takes parsed JSON-ish input and returns a plain dict that
serializes deterministically: points in the first-coordinate-zero form,
sets sorted, rationals as reduced "p/q" strings, integers bare.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Dict, List, Optional, Sequence

from . import grassmann, linalg, polytope, render
from .points import DimensionMismatch, PointConfiguration, TropicalPoint
from .polyhedra import EmptyPolyhedronError, NotPointedError
from .polytope import PreconditionError
from .rationals import ScalarParseError, format_scalar, parse_scalar


class ParseError(ValueError):
    """Malformed input document or flag value."""


#: exceptions reported as precondition violations (CLI exit code 2)
PRECONDITION_ERRORS = (
    PreconditionError,
    DimensionMismatch,
    linalg.NotSquareError,
    linalg.InfiniteDeterminantError,
    linalg.SignCapExceeded,
    EmptyPolyhedronError,
    NotPointedError,
)


def parse_point_configuration(rows) -> PointConfiguration:
    """Strict parsing of an n x d array of rationals (no infinities)."""
    if not isinstance(rows, list) or not rows:
        raise ParseError("expected a non-empty array of point rows")
    parsed = []
    widths = set()
    for r, row in enumerate(rows):
        if not isinstance(row, list):
            raise ParseError(f"row {r}: expected an array")
        widths.add(len(row))
        try:
            parsed.append([parse_scalar(x) for x in row])
        except ScalarParseError as exc:
            raise ParseError(f"row {r}: {exc}") from exc
    if len(widths) != 1:
        raise ParseError("ragged input: rows have different lengths")
    try:
        return PointConfiguration(parsed)
    except (ValueError, DimensionMismatch) as exc:
        raise ParseError(str(exc)) from exc


def parse_matrix(rows):
    """Matrix rows for determinant-type commands; 'inf' entries allowed."""
    if not isinstance(rows, list) or not rows:
        raise ParseError("expected a non-empty array of matrix rows")
    try:
        return linalg.as_matrix(rows, allow_inf=True)
    except ScalarParseError as exc:
        raise ParseError(str(exc)) from exc
    except ValueError as exc:
        raise ParseError(str(exc)) from exc


def parse_point(spec) -> TropicalPoint:
    """A single point from a list or a comma-separated string."""
    if isinstance(spec, str):
        spec = [tok.strip() for tok in spec.split(",")]
    if not isinstance(spec, list) or not spec:
        raise ParseError("expected point coordinates")
    try:
        return TropicalPoint([parse_scalar(x) for x in spec])
    except ScalarParseError as exc:
        raise ParseError(str(exc)) from exc


def _shift(i: int, zero_based: bool) -> int:
    return i - 1 if zero_based else i


def _fmt_point(p: TropicalPoint) -> list:
    return [format_scalar(c) for c in p.chart_rep().coords]


def _fmt_type(T, zero_based: bool) -> list:
    return [sorted(_shift(i, zero_based) for i in entry) for entry in T]


def _fmt_pairs(cell, zero_based: bool) -> list:
    return sorted(
        [_shift(i, zero_based), _shift(j, zero_based)] for i, j in cell
    )


def _fmt_basis_labels(ground: Sequence[int], zero_based: bool) -> Dict[int, str]:
    labels = {g: str(_shift(g, zero_based)) for g in ground}
    return labels


def _fmt_subset(subset, labels: Dict[int, str]) -> str:
    parts = [labels[g] for g in sorted(subset)]
    if all(len(p) == 1 for p in parts):
        return "".join(parts)
    return ",".join(parts)


# ---------------------------------------------------------------------------
# tropical linear algebra commands


def op_tdet(rows, zero_based: bool = False) -> dict:
    m = parse_matrix(rows)
    res = linalg.trop_det(m)
    realizer = None
    if res.realizer is not None:
        realizer = [_shift(j + 1, zero_based) for j in res.realizer]
    return {"value": format_scalar(res.value), "realizer": realizer}


def op_tsgn(rows, sign_cap: int = linalg.DEFAULT_SIGN_CAP) -> dict:
    m = parse_matrix(rows)
    return {"sign": linalg.trop_sign(m, cap=sign_cap)}


def op_singular(rows) -> dict:
    m = parse_matrix(rows)
    return {"singular": linalg.is_singular(m)}


# ---------------------------------------------------------------------------
# tropical polytope commands


def op_pseudovertices(rows) -> dict:
    V = parse_point_configuration(rows)
    return {"pseudo_vertices": [_fmt_point(p) for p in polytope.pseudo_vertices(V)]}


def op_vertices(rows, zero_based: bool = False) -> dict:
    V = parse_point_configuration(rows)
    idx = polytope.tropical_vertex_indices(V)
    return {
        "vertices": [_fmt_point(V.points[i - 1]) for i in idx],
        "indices": [_shift(i, zero_based) for i in idx],
    }


def op_type(rows, point, zero_based: bool = False) -> dict:
    V = parse_point_configuration(rows)
    x = parse_point(point)
    T = polytope.type_of(V, x)
    return {"point": _fmt_point(x), "type": _fmt_type(T, zero_based)}


def op_contains(rows, point) -> dict:
    V = parse_point_configuration(rows)
    x = parse_point(point)
    return {"contains": polytope.contains(V, x)}


def op_bounded_complex(rows, zero_based: bool = False) -> dict:
    V = parse_point_configuration(rows)
    bc = polytope.bounded_complex(V)
    cells_by_dim = {
        str(dim): [[_shift(i + 1, zero_based) for i in cell] for cell in cells]
        for dim, cells in sorted(bc.faces.items())
    }
    maximal = [
        [_shift(i + 1, zero_based) for i in cell] for cell in bc.maximal_cells
    ]
    types = [
        _fmt_type(polytope.cell_type(V, bc, cell), zero_based)
        for cell in bc.maximal_cells
    ]
    return {
        "pseudo_vertices": [_fmt_point(p) for p in bc.pseudo_vertices],
        "f_vector": list(bc.f_vector),
        "maximal_cells": maximal,
        "cell_types": types,
        "cells_by_dim": cells_by_dim,
    }


def op_halfspaces(rows, zero_based: bool = False) -> dict:
    V = parse_point_configuration(rows)
    hs = polytope.minimal_halfspaces(V)
    return {
        "halfspaces": [
            {
                "apex": _fmt_point(h.apex),
                "sectors": sorted(_shift(k, zero_based) for k in h.sectors),
            }
            for h in hs
        ]
    }


def op_cornered_hull(rows) -> dict:
    V = parse_point_configuration(rows)
    _, verts = polytope.cornered_hull(V)
    return {
        "corners": [_fmt_point(c) for c in polytope.corners(V)],
        "vertices": [_fmt_point(p) for p in verts],
    }


def op_dual_subdivision(rows, zero_based: bool = False) -> dict:
    V = parse_point_configuration(rows)
    cells = polytope.dual_subdivision(V)
    return {"cells": [_fmt_pairs(c, zero_based) for c in cells]}


def op_alexander_dual(rows, zero_based: bool = False) -> dict:
    V = parse_point_configuration(rows)
    gens = polytope.alexander_dual_generators(V)
    return {"generators": [_fmt_pairs(g, zero_based) for g in gens]}


def op_generic(rows) -> dict:
    V = parse_point_configuration(rows)
    generic = polytope.is_sufficiently_generic(V)
    out = {"generic": generic}
    if generic:
        out["triangulation_f_vector"] = list(polytope.triangulation_f_vector(V))
    return out


# ---------------------------------------------------------------------------
# Grassmannian commands


def op_pluecker(rows, zero_based: bool = False) -> dict:
    V = parse_point_configuration(rows)
    p = grassmann.pluecker_vector(V)
    labels = _fmt_basis_labels(p.ground, zero_based)
    values = {
        _fmt_subset(s, labels): format_scalar(p.values[frozenset(s)])
        for s in p.subsets()
    }
    return {"rank": p.rank, "ground_size": p.size, "values": values}


def op_matroid_subdivision(rows, zero_based: bool = False) -> dict:
    V = parse_point_configuration(rows)
    p = grassmann.pluecker_vector(V)
    cells = grassmann.matroid_subdivision(p)
    labels = _fmt_basis_labels(p.ground, zero_based)
    return {
        "cells": [
            [_fmt_subset(b, labels) for b in cell] for cell in cells
        ]
    }


def op_contraction(rows, index: int, zero_based: bool = False) -> dict:
    V = parse_point_configuration(rows)
    p = grassmann.pluecker_vector(V)
    pi = grassmann.contraction_restriction(p, _unshift(index, zero_based))
    labels = _fmt_basis_labels(pi.ground, zero_based)
    values = {
        _fmt_subset(s, labels): format_scalar(pi.values[frozenset(s)])
        for s in pi.subsets()
    }
    return {
        "rank": pi.rank,
        "ground": [_shift(g, zero_based) for g in pi.ground],
        "values": values,
    }


def _unshift(i: int, zero_based: bool) -> int:
    return i + 1 if zero_based else i


def _parse_norm(offset, scale):
    try:
        off = None if offset is None else Fraction(parse_scalar(offset))
        sc = None if scale is None else Fraction(parse_scalar(scale))
    except ScalarParseError as exc:
        raise ParseError(str(exc)) from exc
    return off, sc


def _metric_matrix(delta: grassmann.MetricOnLeaves) -> list:
    return [
        [format_scalar(delta.dist(x, y)) for y in delta.leaves]
        for x in delta.leaves
    ]


def op_tree_metric(rows, index: int, offset=None, scale=None,
                   zero_based: bool = False) -> dict:
    V = parse_point_configuration(rows)
    p = grassmann.pluecker_vector(V)
    pi = grassmann.contraction_restriction(p, _unshift(index, zero_based))
    off, sc = _parse_norm(offset, scale)
    if off is None and sc is None:
        off, sc = grassmann._default_normalization(
            list(p.values.values()), None, None
        )
    delta = grassmann.metric_from_restriction(pi, off, sc)
    return {
        "leaves": [_shift(x, zero_based) for x in delta.leaves],
        "offset": format_scalar(off if off is not None else Fraction(0)),
        "scale": format_scalar(sc),
        "tree_metric": grassmann.is_tree_metric(delta),
        "matrix": _metric_matrix(delta),
    }


def op_tree(rows, index: int, offset=None, scale=None,
            zero_based: bool = False) -> dict:
    V = parse_point_configuration(rows)
    p = grassmann.pluecker_vector(V)
    pi = grassmann.contraction_restriction(p, _unshift(index, zero_based))
    off, sc = _parse_norm(offset, scale)
    if off is None and sc is None:
        off, sc = grassmann._default_normalization(
            list(p.values.values()), None, None
        )
    delta = grassmann.metric_from_restriction(pi, off, sc)
    tree = grassmann.tree_from_metric(delta)
    return {
        "leaves": [
            [_shift(label, zero_based), node]
            for label, node in sorted(tree.leaf_node.items())
        ],
        "edges": [
            [a, b, format_scalar(length)] for a, b, length in tree.edges()
        ],
    }


def op_arrangement(rows, offset=None, scale=None,
                   zero_based: bool = False) -> dict:
    V = parse_point_configuration(rows)
    off, sc = _parse_norm(offset, scale)
    arr = grassmann.tree_arrangement(V, off, sc)
    return {
        "offset": format_scalar(arr.offset),
        "scale": format_scalar(arr.scale),
        "compatible": arr.compatible,
        "trees": [
            {
                "contraction": _shift(i, zero_based),
                "leaves": [_shift(x, zero_based) for x in delta.leaves],
                "matrix": _metric_matrix(delta),
            }
            for i, delta in sorted(arr.metrics.items())
        ],
    }


# ---------------------------------------------------------------------------
# rendering


def op_svg(rows, layers: Optional[List[str]] = None) -> str:
    V = parse_point_configuration(rows)
    bc = polytope.bounded_complex(V)
    return render.emit_svg(
        V, bc, layers=tuple(layers) if layers else render.DEFAULT_LAYERS
    )
