"""Degree 8: triples with equal sums of squares and fourth powers, lifted to eighth powers.

For a point x on the quartic v^2 = 25x^4 + 144x^3 - 1280x^2 - 4608x + 25600,
the quadratic f(x, a, b) = 0 has rational roots a/b. Each root gives two triples
with equal sums of squares and of fourth powers. Lifting the triples gives a
7-vs-7 pair of eighth powers in which one term cancels, so the result is 6-vs-6.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from powersum.errors import ConditionError, NoRationalRootError, QuarticConditionError
from powersum.exactcore import (
    MultiPoly,
    PowerSumPair,
    RationalLike,
    canonicalize,
    power_sum,
    rational_sqrt,
    to_rational,
)
from powersum.families.common import format_params, require_valid

logger = logging.getLogger(__name__)

# (x, a, b) rows that reproduce published 6-vs-6 solutions
DEG8_EXAMPLES = ((1, 47, 82), (-6, 21, 113), (6, 15, 139), (-14, 5, 9), (-14, 3, -37))


def _f_coefficients(x: Fraction) -> tuple[Fraction, Fraction, Fraction]:
    """Coefficients of a^2, ab and b^2 in f."""
    return 8 * x**2 + 21 * x - 275, -5 * x**2 - 24 * x + 170, 3 * x - 3


def deg8_condition_f(x: RationalLike, a: RationalLike, b: RationalLike) -> Fraction:
    x, a, b = to_rational(x), to_rational(a), to_rational(b)
    ca, cab, cb = _f_coefficients(x)
    return ca * a**2 + cab * a * b + cb * b**2


def deg8_condition_poly() -> MultiPoly:
    x, a, b = MultiPoly.symbols("x a b")
    return (8 * x**2 + 21 * x - 275) * a**2 + (-5 * x**2 - 24 * x + 170) * a * b + (3 * x - 3) * b**2


def deg8_discriminant(x: RationalLike) -> Fraction:
    x = to_rational(x)
    return 25 * x**4 + 144 * x**3 - 1280 * x**2 - 4608 * x + 25600


def deg8_solve_ab(x: RationalLike) -> list[Fraction]:
    """Rational roots a/b of f(x, a, b) = 0."""
    x = to_rational(x)
    ca, cab, cb = _f_coefficients(x)
    if not ca:
        if not cab:
            raise NoRationalRootError(f"f(x={x}) has no finite root a/b", residual=cb)
        return [-cb / cab]
    disc = cab**2 - 4 * ca * cb
    root = rational_sqrt(disc)
    if root is None:
        raise NoRationalRootError(f"discriminant at x={x} is not a rational square", residual=disc)
    return sorted({(-cab + root) / (2 * ca), (-cab - root) / (2 * ca)})


def deg8_parameters_from_u(u: RationalLike) -> list[tuple[Fraction, int, int]]:
    """(x, a, b) with coprime integers a, b for every usable root at x = u.

    The root a = 0 (only at x = 1) yields a trivial pair and is skipped.
    """
    x = to_rational(u)
    params = []
    for ratio in deg8_solve_ab(x):
        if not ratio:
            logger.debug("skipping a=0 at x=%s", x)
            continue
        params.append((x, ratio.numerator, ratio.denominator))
    return params


@dataclass(frozen=True)
class Deg8Triples:
    a1: Fraction
    a2: Fraction
    a3: Fraction
    b1: Fraction
    b2: Fraction
    b3: Fraction

    def __post_init__(self):
        for name in ("a1", "a2", "a3", "b1", "b2", "b3"):
            object.__setattr__(self, name, to_rational(getattr(self, name)))
        for k in (2, 4):
            gap = power_sum(self.left, k) - power_sum(self.right, k)
            if gap:
                raise QuarticConditionError(f"triples differ at k={k}", residual=gap)

    @property
    def left(self) -> tuple[Fraction, Fraction, Fraction]:
        return self.a1, self.a2, self.a3

    @property
    def right(self) -> tuple[Fraction, Fraction, Fraction]:
        return self.b1, self.b2, self.b3


def _triples(x, a, b):
    s1 = 5 * a - 3 * b
    s2 = 19 * a - 5 * b
    a1 = a * x + s1
    a2 = b * x + s2
    a3 = b * x + s2 - 3 * (a * x + s1)
    b1 = a * x - s2
    b2 = b * x - s1
    b3 = (b - 3 * a) * x - s2 + 3 * s1
    return a1, a2, a3, b1, b2, b3


@lru_cache(maxsize=None)
def deg8_triples_poly() -> tuple[MultiPoly, ...]:
    """(a1, a2, a3, b1, b2, b3) as polynomials in (x, a, b)."""
    return _triples(*MultiPoly.symbols("x a b"))


def deg8_triples(x: RationalLike, a: RationalLike, b: RationalLike) -> Deg8Triples:
    x, a, b = to_rational(x), to_rational(a), to_rational(b)
    f = deg8_condition_f(x, a, b)
    if f:
        raise QuarticConditionError(f"f(x, a, b) = {f} at " + format_params(x=x, a=a, b=b), residual=f)
    return Deg8Triples(*_triples(x, a, b))


def sinha_lift(triples: Deg8Triples) -> PowerSumPair:
    """7-vs-7 eighth powers from triples with equal squares and fourth powers."""
    a1, a2, a3 = triples.left
    b1, b2, b3 = triples.right
    lhs = (2 * a1, 2 * a2, b1 + b2 + b3, 2 * a3, b1 - b2 + b3, -b1 + b2 + b3, b1 + b2 - b3)
    rhs = (a1 - a2 + a3, -a1 + a2 + a3, 2 * b3, a1 + a2 + a3, 2 * b1, 2 * b2, a1 + a2 - a3)
    return PowerSumPair(lhs, rhs, frozenset({8}), "sinha_lift")


def deg8_family(x: RationalLike, a: RationalLike, b: RationalLike) -> PowerSumPair:
    """Canonical 6-vs-6 eighth-power pair for a point (x, a, b) on f = 0."""
    x, a, b = to_rational(x), to_rational(a), to_rational(b)
    lifted = sinha_lift(deg8_triples(x, a, b))
    if lifted.lhs[0] != -lifted.rhs[0]:
        raise ConditionError("leading lifted terms do not cancel", residual=lifted.lhs[0] + lifted.rhs[0])
    source = "deg8_family " + format_params(x=x, a=a, b=b)
    reduced = PowerSumPair(lifted.lhs[1:], lifted.rhs[1:], frozenset({8}), source)
    return require_valid(canonicalize(reduced), source)
