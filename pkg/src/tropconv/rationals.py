"""Exact scalars for the min-plus semiring: rationals extended by infinity.

All arithmetic in this package runs over ``fractions.Fraction`` plus a
single distinguished infinity ``INF``, the neutral element of tropical
addition.  No floating point anywhere.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Union


class TropicalInfinity:
    """The tropical-additive identity; absorbing for tropical multiplication.

    A singleton: use the module-level ``INF``.  Supports just enough
    arithmetic and comparison to mix freely with ``Fraction`` in ``min()``
    and sums (``INF + x == INF``, ``x < INF`` for finite ``x``).
    """

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "INF"

    def __str__(self):
        return "inf"

    def __hash__(self):
        return hash("tropconv.INF")

    def __eq__(self, other):
        return isinstance(other, TropicalInfinity)

    def __ne__(self, other):
        return not isinstance(other, TropicalInfinity)

    def __lt__(self, other):
        return False

    def __le__(self, other):
        return isinstance(other, TropicalInfinity)

    def __gt__(self, other):
        return not isinstance(other, TropicalInfinity)

    def __ge__(self, other):
        return True

    def __add__(self, other):
        return self

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, TropicalInfinity):
            raise ArithmeticError("INF - INF is undefined")
        return self

    def __rsub__(self, other):
        raise ArithmeticError("cannot subtract INF from a finite value")

    def __neg__(self):
        raise ArithmeticError("-INF is not an extended rational")

    def __mul__(self, other):
        raise ArithmeticError("ordinary multiplication with INF is undefined")

    __rmul__ = __mul__


INF = TropicalInfinity()

#: An exact rational number or the tropical infinity.
ExtRat = Union[Fraction, TropicalInfinity]


def is_inf(x: ExtRat) -> bool:
    return isinstance(x, TropicalInfinity)


def trop_add(a: ExtRat, b: ExtRat) -> ExtRat:
    """Tropical addition: min, with INF neutral."""
    if is_inf(a):
        return b
    if is_inf(b):
        return a
    return a if a <= b else b


def trop_mul(a: ExtRat, b: ExtRat) -> ExtRat:
    """Tropical multiplication: ordinary addition, with INF absorbing."""
    if is_inf(a) or is_inf(b):
        return INF
    return a + b


class ScalarParseError(ValueError):
    """Raised when a scalar token cannot be parsed as an extended rational."""


def parse_scalar(token, allow_inf: bool = False) -> ExtRat:
    """Parse an integer, a "p/q" string, or (optionally) "inf".

    Accepts Python ints and strings; denominators must be positive after
    reduction, zero denominators are rejected.
    """
    if isinstance(token, TropicalInfinity):
        if not allow_inf:
            raise ScalarParseError("'inf' is not allowed here")
        return token
    if isinstance(token, bool):
        raise ScalarParseError(f"not a rational: {token!r}")
    if isinstance(token, int):
        return Fraction(token)
    if isinstance(token, Fraction):
        return token
    if isinstance(token, str):
        text = token.strip()
        if text.lower() in ("inf", "infinity", "∞"):
            if not allow_inf:
                raise ScalarParseError("'inf' is not allowed here")
            return INF
        # integers or reduced-or-not "p/q" only; no decimal notation
        if not re.fullmatch(r"[+-]?\d+(/\d+)?", text):
            raise ScalarParseError(f"not a rational: {token!r}")
        try:
            value = Fraction(text)
        except (ValueError, ZeroDivisionError) as exc:
            raise ScalarParseError(f"not a rational: {token!r}") from exc
        return value
    raise ScalarParseError(f"not a rational: {token!r}")


def format_scalar(x: ExtRat):
    """Serialize for JSON: bare int, reduced "p/q" string, or "inf"."""
    if is_inf(x):
        return "inf"
    if x.denominator == 1:
        return int(x)
    return f"{x.numerator}/{x.denominator}"
