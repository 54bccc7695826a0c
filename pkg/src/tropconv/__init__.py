"""Exact tropical convexity over the rationals.

Min-plus convention throughout: tropical addition is ``min``, tropical
multiplication is ``+``.  All arithmetic is exact (``fractions.Fraction``
plus a formal infinity); floats appear only at the SVG rendering edge.
"""

from .grassmann import (
    MetricOnLeaves,
    PlueckerVector,
    TreeArrangement,
    WeightedTree,
    check_pluecker,
    contraction_restriction,
    is_matroid,
    is_tree_metric,
    matroid_subdivision,
    metric_from_restriction,
    pluecker_vector,
    tree_arrangement,
    tree_from_metric,
)
from .linalg import (
    InfiniteDeterminantError,
    NotSquareError,
    SignCapExceeded,
    TropicalDetResult,
    is_singular,
    trop_det,
    trop_sign,
)
from .points import (
    DimensionMismatch,
    PointConfiguration,
    TropicalPoint,
    sector_set,
)
from .polytope import (
    BoundedComplex,
    PreconditionError,
    TropicalHalfspace,
    alexander_dual_generators,
    bounded_complex,
    contains,
    cornered_hull,
    corners,
    dual_subdivision,
    is_sufficiently_generic,
    minimal_halfspaces,
    pseudo_vertices,
    triangulation_f_vector,
    tropical_vertex_indices,
    tropical_vertices,
    type_of,
)
from .rationals import INF, format_scalar, parse_scalar, trop_add, trop_mul
from .render import emit_svg

__version__ = "0.1.0"

__all__ = [
    "INF",
    "BoundedComplex",
    "DimensionMismatch",
    "InfiniteDeterminantError",
    "MetricOnLeaves",
    "NotSquareError",
    "PlueckerVector",
    "PointConfiguration",
    "PreconditionError",
    "SignCapExceeded",
    "TreeArrangement",
    "TropicalDetResult",
    "TropicalHalfspace",
    "TropicalPoint",
    "WeightedTree",
    "alexander_dual_generators",
    "bounded_complex",
    "check_pluecker",
    "contains",
    "contraction_restriction",
    "cornered_hull",
    "corners",
    "dual_subdivision",
    "emit_svg",
    "format_scalar",
    "is_matroid",
    "is_singular",
    "is_sufficiently_generic",
    "is_tree_metric",
    "matroid_subdivision",
    "metric_from_restriction",
    "minimal_halfspaces",
    "parse_scalar",
    "pluecker_vector",
    "pseudo_vertices",
    "sector_set",
    "tree_arrangement",
    "tree_from_metric",
    "triangulation_f_vector",
    "trop_add",
    "trop_det",
    "trop_mul",
    "trop_sign",
    "tropical_vertex_indices",
    "tropical_vertices",
    "type_of",
]
