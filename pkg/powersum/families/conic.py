"""Rational points on x^2 + xy + y^2 = N by secant lines through a base point.

The three numbers x, y, x + y of such a point satisfy
x^2 + y^2 + (x+y)^2 = 2N and x^4 + y^4 + (x+y)^4 = 2N^2, which is what the
degree-2 and degree-4 families are built on.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Any

from powersum.exactcore import RationalLike, to_rational


def conic_norm(x: Any, y: Any) -> Any:
    return x * x + x * y + y * y


@dataclass(frozen=True)
class ConicPoint:
    x: Fraction
    y: Fraction
    norm: Fraction

    def __post_init__(self):
        if conic_norm(self.x, self.y) != self.norm:
            raise ValueError(f"({self.x}, {self.y}) is not on x^2+xy+y^2 = {self.norm}")

    @property
    def triple(self) -> tuple[Fraction, Fraction, Fraction]:
        return self.x, self.y, self.x + self.y


def line_intersection_numerators(x0: Any, y0: Any, k: Any) -> tuple[Any, Any, Any]:
    """(X, Y, D) with (X/D, Y/D) the second point of the slope-k line through (x0, y0).

    Works on rationals and on polynomials alike; D = k^2 + k + 1 never vanishes
    for rational k.
    """
    denominator = k * k + k + 1
    slope_term = 2 * x0 + y0 + k * (x0 + 2 * y0)
    return x0 * denominator - slope_term, y0 * denominator - k * slope_term, denominator


def conic_line_parameterize(x0: RationalLike, y0: RationalLike, k: RationalLike) -> ConicPoint:
    """Second intersection of the line {(x0 + t, y0 + k t)} with the conic through (x0, y0)."""
    x0, y0, k = to_rational(x0), to_rational(y0), to_rational(k)
    numer_x, numer_y, denominator = line_intersection_numerators(x0, y0, k)
    return ConicPoint(numer_x / denominator, numer_y / denominator, conic_norm(x0, y0))
