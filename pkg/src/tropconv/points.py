"""Points of the tropical torus and finite point configurations.

A point of the tropical torus has d rational coordinates defined up to a
common additive shift.  Coordinates are stored exactly as given; equality
and hashing go through the canonical representative (all coordinates
non-negative, at least one zero).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Tuple

from .rationals import ExtRat, INF, is_inf, parse_scalar


class DimensionMismatch(ValueError):
    """Operands live in tropical tori of different dimensions."""


@dataclass(frozen=True)
class TropicalPoint:
    """A point of the tropical torus, coordinates modulo the all-ones vector."""

    coords: Tuple[Fraction, ...]

    def __init__(self, coords: Iterable):
        object.__setattr__(
            self, "coords", tuple(Fraction(parse_scalar(c)) for c in coords)
        )
        if len(self.coords) < 1:
            raise ValueError("a tropical point needs at least one coordinate")

    @property
    def dim(self) -> int:
        return len(self.coords)

    def normalize(self) -> "TropicalPoint":
        """Canonical representative: all coordinates >= 0, at least one zero."""
        m = min(self.coords)
        return TropicalPoint(c - m for c in self.coords)

    def chart_rep(self) -> "TropicalPoint":
        """Representative with first coordinate zero (display convention)."""
        first = self.coords[0]
        return TropicalPoint(c - first for c in self.coords)

    def affine_chart(self) -> Tuple[Fraction, ...]:
        """Image under (x_1,...,x_d) -> (x_2-x_1, ..., x_d-x_1)."""
        first = self.coords[0]
        return tuple(c - first for c in self.coords[1:])

    def shift(self, t) -> "TropicalPoint":
        """Add t times the all-ones vector (the same point of the torus)."""
        t = Fraction(parse_scalar(t))
        return TropicalPoint(c + t for c in self.coords)

    def __eq__(self, other):
        if not isinstance(other, TropicalPoint):
            return NotImplemented
        return self.normalize().coords == other.normalize().coords

    def __hash__(self):
        return hash(self.normalize().coords)

    def __repr__(self):
        return f"TropicalPoint({list(self.coords)!r})"


def from_chart(chart: Sequence) -> TropicalPoint:
    """Inverse of ``affine_chart``: prepend a zero first coordinate."""
    return TropicalPoint([0, *chart])


def sector_set(v: TropicalPoint, apex: TropicalPoint) -> frozenset:
    """Indices k (1-based) with v in apex + closed sector k.

    Equals argmin_j (v_j - apex_j); never empty.
    """
    if v.dim != apex.dim:
        raise DimensionMismatch(f"dimensions differ: {v.dim} vs {apex.dim}")
    diffs = [a - b for a, b in zip(v.coords, apex.coords)]
    m = min(diffs)
    return frozenset(k + 1 for k, dk in enumerate(diffs) if dk == m)


@dataclass(frozen=True)
class ExtendedTropicalPoint:
    """Point of tropical projective space: coordinates may be INF, not all."""

    coords: Tuple[ExtRat, ...]

    def __init__(self, coords: Iterable):
        object.__setattr__(
            self, "coords", tuple(parse_scalar(c, allow_inf=True) for c in coords)
        )
        if all(is_inf(c) for c in self.coords):
            raise ValueError("at least one coordinate must be finite")

    @property
    def dim(self) -> int:
        return len(self.coords)

    def __eq__(self, other):
        if not isinstance(other, ExtendedTropicalPoint):
            return NotImplemented
        m_self = min(c for c in self.coords if not is_inf(c))
        m_other = min(c for c in other.coords if not is_inf(c))
        norm = lambda cs, m: tuple(INF if is_inf(c) else c - m for c in cs)
        return norm(self.coords, m_self) == norm(other.coords, m_other)

    def __hash__(self):
        m = min(c for c in self.coords if not is_inf(c))
        return hash(tuple("inf" if is_inf(c) else c - m for c in self.coords))


class PointConfiguration:
    """An ordered sequence of n tropical points of common dimension d.

    Identified with the n x d matrix whose i-th row is the i-th point.
    """

    def __init__(self, points: Iterable[TropicalPoint]):
        pts = []
        for p in points:
            if not isinstance(p, TropicalPoint):
                p = TropicalPoint(p)
            pts.append(p)
        if not pts:
            raise ValueError("need at least one point")
        d = pts[0].dim
        if any(p.dim != d for p in pts):
            raise DimensionMismatch("all points must share the same dimension")
        if d < 2:
            raise ValueError("ambient dimension must be at least 2")
        self.points: Tuple[TropicalPoint, ...] = tuple(pts)
        self.n = len(pts)
        self.d = d

    def matrix(self) -> Tuple[Tuple[Fraction, ...], ...]:
        return tuple(p.coords for p in self.points)

    def entry(self, i: int, j: int) -> Fraction:
        """Matrix entry v_ij, 1-based indices."""
        return self.points[i - 1].coords[j - 1]

    def translate(self, c: TropicalPoint) -> "PointConfiguration":
        """Translate every point by c (coordinatewise tropical scaling)."""
        if c.dim != self.d:
            raise DimensionMismatch("translation vector has wrong dimension")
        return PointConfiguration(
            TropicalPoint(a + b for a, b in zip(p.coords, c.coords))
            for p in self.points
        )

    def __len__(self):
        return self.n

    def __iter__(self):
        return iter(self.points)

    def __getitem__(self, i):
        return self.points[i]

    def __repr__(self):
        return f"PointConfiguration(n={self.n}, d={self.d})"
