from fractions import Fraction

import pytest

from tropconv.points import PointConfiguration, TropicalPoint


def F(x) -> Fraction:
    return Fraction(x)


def pt(*coords) -> TropicalPoint:
    return TropicalPoint([Fraction(c) for c in coords])


def config(rows) -> PointConfiguration:
    return PointConfiguration([[Fraction(x) for x in row] for row in rows])


# four points in the tropical plane; the worked example used throughout
EXAMPLE_ROWS = [[0, 3, 6], [0, 5, 2], [0, 0, 1], [1, 5, 0]]


@pytest.fixture
def example() -> PointConfiguration:
    return config(EXAMPLE_ROWS)
