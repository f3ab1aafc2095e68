"""Degree 9: twelve linear forms equal at k = 1, 2, 3, forced to agree at k = 9.

With x_i = M_i + e_i w and y_i = M_i - e_i w (e = +,+,+,-,-,-), the k = 9
residual is 2w(9 S8 + 84 S6 w^2 + 126 S4 w^4), where S_j = sum e_i M_i^j.
The ratio m : n comes from two cubics in (a, b, t) and needs their negated
product, a quartic in t, to be a rational square. Once (m : n) is fixed,
w^2 is a rational root of the remaining quadratic.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import Any

from powersum.errors import ConditionError, NoRationalRootError, NotAdmissibleError
from powersum.exactcore import (
    MultiPoly,
    PolyPair,
    PowerSumPair,
    RationalLike,
    canonicalize,
    rational_sqrt,
    to_rational,
)
from powersum.families.common import format_params, require_valid

logger = logging.getLogger(__name__)

DEG9_VARIABLES = ("a", "b", "t", "m", "n", "w")
DEG9_SIGNS = (1, 1, 1, -1, -1, -1)
DEG9_DEGREES = frozenset({1, 2, 3, 9})


def deg9_linear_parts(a: Any, b: Any, t: Any, m: Any, n: Any) -> tuple[Any, ...]:
    """M_1 .. M_6 (rationals or polynomials)."""
    return (
        2 * (a + b) * m + (a - b + t) * n,
        -2 * a * m + (a + b + t) * n,
        -2 * b * m - (a + b - t) * n,
        -2 * (a + b) * m + (a - b + t) * n,
        2 * a * m + (a + b + t) * n,
        2 * b * m - (a + b - t) * n,
    )


def _forms_pair(parts: tuple[Any, ...], w: Any, degrees: frozenset[int], source: str) -> PolyPair | PowerSumPair:
    lhs = tuple(part + sign * w for part, sign in zip(parts, DEG9_SIGNS, strict=True))
    rhs = tuple(part - sign * w for part, sign in zip(parts, DEG9_SIGNS, strict=True))
    cls = PolyPair if isinstance(w, MultiPoly) else PowerSumPair
    return cls(lhs, rhs, degrees, source)


@lru_cache(maxsize=None)
def deg9_template() -> PolyPair:
    """The forms in all six parameters; an identity at k = 1, 2, 3."""
    a, b, t, m, n, w = MultiPoly.symbols(DEG9_VARIABLES)
    return _forms_pair(deg9_linear_parts(a, b, t, m, n), w, frozenset({1, 2, 3}), "deg9_forms")


def deg9_signed_power_sum(j: int) -> MultiPoly:
    """S_j = sum e_i M_i^j in (a, b, t, m, n)."""
    a, b, t, m, n = MultiPoly.symbols(DEG9_VARIABLES[:5])
    parts = deg9_linear_parts(a, b, t, m, n)
    return sum((sign * part**j for part, sign in zip(parts, DEG9_SIGNS, strict=True)), MultiPoly.constant(0))


@dataclass(frozen=True)
class Deg9Params:
    a: Fraction
    b: Fraction
    t: Fraction
    m: Fraction
    n: Fraction
    w: Fraction

    def __post_init__(self):
        for name in DEG9_VARIABLES:
            object.__setattr__(self, name, to_rational(getattr(self, name)))

    def label(self) -> str:
        return format_params(a=self.a, b=self.b, t=self.t, m=self.m, n=self.n, w=self.w)


def deg9_forms(params: Deg9Params) -> PowerSumPair:
    """Raw pair; degrees include 9 only when the k = 9 residual vanishes."""
    parts = deg9_linear_parts(params.a, params.b, params.t, params.m, params.n)
    pair = _forms_pair(parts, params.w, frozenset({1, 2, 3}), "deg9_forms " + params.label())
    if pair.residual(9) == 0:
        pair = pair.with_degrees(DEG9_DEGREES)
    return pair


# ---------------------------------------------------------------------------
# (m : n) condition and the quartic in t
# ---------------------------------------------------------------------------


@lru_cache(maxsize=None)
def deg9_condition_polys() -> tuple[MultiPoly, MultiPoly]:
    """Coefficients of n^2 and m^2 as cubics in (a, b, t)."""
    a, b, t = MultiPoly.symbols("a b t")
    coef_n2 = (
        -14 * b * t**2 - 7 * b * a * t + a**3 + 2 * a * b**2 + 14 * a * t**2
        - 2 * a**2 * b - b**3 + 7 * a**2 * t + 7 * b**2 * t + 14 * t**3
    )
    coef_m2 = -4 * a * b**2 - 5 * b**3 + 4 * a**2 * b + 5 * a**3 + 7 * b**2 * t + 7 * a**2 * t + 7 * b * a * t
    return coef_n2, coef_m2


def deg9_condition(a: RationalLike, b: RationalLike, t: RationalLike) -> tuple[Fraction, Fraction]:
    bindings = {"a": a, "b": b, "t": t}
    coef_n2, coef_m2 = deg9_condition_polys()
    return coef_n2.evaluate(bindings), coef_m2.evaluate(bindings)


@lru_cache(maxsize=None)
def deg9_quartic_coefficient_polys() -> tuple[MultiPoly, ...]:
    """Coefficients of t^4 .. t^0 as forms in (a, b)."""
    a, b = MultiPoly.symbols("a b")
    return (
        -98 * (a**2 + a * b + b**2),
        56 * a * b**2 - 56 * a**2 * b + 168 * b**3 - 168 * a**3,
        63 * a**2 * b**2 - 119 * a**4 + 14 * a * b**3 - 119 * b**4 + 14 * a**3 * b,
        14 * a**3 * b**2 - 14 * a**2 * b**3 - 42 * a**5 + 42 * b**5 - 14 * a * b**4 + 14 * a**4 * b,
        6 * a * b**5 + 6 * a**5 * b - 5 * a**6 + 2 * a**4 * b**2 - 5 * b**6 - 6 * a**3 * b**3 + 2 * a**2 * b**4,
    )


def deg9_quartic_poly() -> MultiPoly:
    (t,) = MultiPoly.symbols("t")
    coefficients = deg9_quartic_coefficient_polys()
    return sum((c * t ** (4 - i) for i, c in enumerate(coefficients)), MultiPoly.constant(0))


def deg9_quartic_rhs(a: RationalLike, b: RationalLike) -> tuple[Fraction, ...]:
    bindings = {"a": a, "b": b}
    return tuple(c.evaluate(bindings) for c in deg9_quartic_coefficient_polys())


def quartic_value(coefficients: tuple[Fraction, ...], t: Fraction) -> Fraction:
    value = Fraction(0)
    for c in coefficients:
        value = value * t + c
    return value


def deg9_solve_mn(a: RationalLike, b: RationalLike, t: RationalLike) -> tuple[int, int]:
    """Primitive (m, n), n >= 0, with coef_n2 n^2 + coef_m2 m^2 = 0."""
    coef_n2, coef_m2 = deg9_condition(a, b, t)
    if not coef_m2:
        if not coef_n2:
            raise ConditionError("both coefficients vanish: every (m : n) solves the condition")
        return 1, 0
    ratio = rational_sqrt(-coef_n2 / coef_m2)
    if ratio is None:
        raise NoRationalRootError(
            "no rational (m : n): the quartic in t is not a rational square at "
            + format_params(a=a, b=b, t=t),
            residual=-coef_n2 * coef_m2,
        )
    if not ratio:
        return 0, 1
    return ratio.numerator, ratio.denominator


def deg9_w_polynomial(a: RationalLike, b: RationalLike, t: RationalLike, m: RationalLike, n: RationalLike) -> MultiPoly:
    """The k = 9 residual as a polynomial in w alone."""
    bindings = {"a": a, "b": b, "t": t, "m": m, "n": n}
    return deg9_template().substitute(bindings).residual(9)


def deg9_solve_w(
    a: RationalLike, b: RationalLike, t: RationalLike, m: RationalLike, n: RationalLike
) -> Fraction | None:
    """Smallest positive rational w killing the k = 9 residual; None if every w does."""
    polynomial = deg9_w_polynomial(a, b, t, m, n)
    if polynomial.is_zero():
        return None
    positive = [root for root in polynomial.rational_roots("w") if root > 0]
    if not positive:
        raise NoRationalRootError("no positive rational w annihilates the k=9 residual", residual=polynomial)
    if len(positive) > 1:
        logger.info("several admissible w %s; using %s", [str(w) for w in positive], positive[0])
    return positive[0]


def deg9_params(a: RationalLike, b: RationalLike, t: RationalLike, w: RationalLike | None = None) -> Deg9Params:
    a, b, t = to_rational(a), to_rational(b), to_rational(t)
    m, n = deg9_solve_mn(a, b, t)
    if w is None:
        solved = deg9_solve_w(a, b, t, m, n)
        if solved is None:
            logger.warning("k=9 residual vanishes for every w at %s; using w=1", format_params(a=a, b=b, t=t))
            solved = Fraction(1)
        return Deg9Params(a, b, t, m, n, solved)
    w = to_rational(w)
    polynomial = deg9_w_polynomial(a, b, t, m, n)
    if not w:
        raise NotAdmissibleError("w = 0 makes both sides identical", polynomial=polynomial)
    value = polynomial.evaluate({"w": w})
    if value:
        raise NotAdmissibleError(
            f"w={w} is not admissible: the k=9 residual is {polynomial}",
            polynomial=polynomial,
            residual=value,
        )
    return Deg9Params(a, b, t, m, n, w)


def deg9_family(a: RationalLike, b: RationalLike, t: RationalLike, w: RationalLike | None = None) -> PowerSumPair:
    """Canonical pair valid at k = 1, 2, 3, 9; w is solved for unless given."""
    params = deg9_params(a, b, t, w)
    pair = deg9_forms(params).with_degrees(DEG9_DEGREES)
    source = "deg9_family " + params.label()
    return require_valid(canonicalize(pair.with_source(source)), source)


def deg9_search(a: RationalLike, b: RationalLike, height: int) -> list[Fraction]:
    """Rationals t = p/q, |p| <= height and 1 <= q <= height, where the quartic is a nonzero square."""
    coefficients = deg9_quartic_rhs(a, b)
    found = []
    for q in range(1, height + 1):
        for p in range(-height, height + 1):
            if gcd(p, q) != 1:
                continue
            t = Fraction(p, q)
            value = quartic_value(coefficients, t)
            if value > 0 and rational_sqrt(value) is not None:
                found.append(t)
    found.sort()
    logger.info("deg9_search a=%s b=%s height=%d: %d values of t", a, b, height, len(found))
    return found
