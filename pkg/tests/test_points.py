from fractions import Fraction

import pytest

from conftest import config, pt
from tropconv.points import (
    DimensionMismatch,
    PointConfiguration,
    TropicalPoint,
    from_chart,
    sector_set,
)


def test_equality_mod_all_ones():
    assert pt(0, 3, 6) == pt(5, 8, 11)
    assert pt(0, 3, 6) != pt(0, 3, 5)
    assert hash(pt(1, 4, 7)) == hash(pt(0, 3, 6))


def test_normalize_idempotent():
    p = pt(7, 3, 11).normalize()
    assert p.normalize() == p
    assert min(p.coords) == 0


def test_chart_rep():
    assert pt(2, 5, 1).chart_rep().coords == (0, 3, -1)
    assert from_chart([Fraction(3), Fraction(-1)]) == pt(0, 3, -1)
    assert pt(0, 3, -1).affine_chart() == (3, -1)


def test_sector_set():
    # v - apex = (0, 2, -1); the unique minimum sits in sector 3
    assert sector_set(pt(0, 5, 1), pt(0, 3, 2)) == frozenset({3})
    assert sector_set(pt(0, 0, 0), pt(0, 0, 0)) == frozenset({1, 2, 3})


def test_point_validation():
    with pytest.raises(ValueError):
        TropicalPoint([])
    with pytest.raises(DimensionMismatch):
        config([[0, 1], [0, 1, 2]])
    with pytest.raises(ValueError):
        PointConfiguration([])
    with pytest.raises(ValueError):
        config([[0], [1]])  # ambient dimension below 2


def test_configuration_accessors():
    V = config([[0, 3, 6], [0, 5, 2]])
    assert (V.n, V.d) == (2, 3)
    assert V.entry(1, 3) == 6
    assert V.entry(2, 1) == 0


def test_translate():
    V = config([[0, 3, 6], [0, 5, 2]])
    W = V.translate(pt(1, -2, 0))
    assert W.points[0] == pt(1, 1, 6)
    assert W.points[1] == pt(1, 3, 2)
