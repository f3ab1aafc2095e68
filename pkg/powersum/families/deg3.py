"""Degree 3: two ways of turning a known cubic identity into a one-parameter family."""
from __future__ import annotations

import logging
from collections.abc import Sequence
from fractions import Fraction
from functools import lru_cache
from typing import NamedTuple

from powersum.errors import DegenerateShiftError, PreconditionError, SymmetryConditionError
from powersum.exactcore import MultiPoly, PolyPair, PowerSumPair, RationalLike, power_sum, to_rational
from powersum.families.common import format_params, instantiate

logger = logging.getLogger(__name__)

DEG3_SHIFT_BASE = ((1, 2, 4, 8, 9, 12), (3, 5, 6, 7, 10, 11))
DEG3_SYMMETRIC_BASE = (2, 5, 10, 6, 21, 22)


class ShiftResult(NamedTuple):
    x: Fraction
    pair: PowerSumPair


def _six(values: Sequence[RationalLike], name: str) -> tuple[Fraction, ...]:
    if len(values) != 6:
        raise ValueError(f"{name} needs six entries, got {len(values)}")
    return tuple(to_rational(v) for v in values)


def deg3_shift_template(base_a: Sequence[RationalLike], base_p: Sequence[RationalLike]) -> PolyPair:
    """(A_i x + 1 | P_i x + 1) as polynomials in x."""
    (x,) = MultiPoly.symbols("x")
    return PolyPair(
        tuple(a * x + 1 for a in base_a),
        tuple(p * x + 1 for p in base_p),
        frozenset({3}),
        "deg3_shift_family",
    )


def deg3_shift_family(base_a: Sequence[RationalLike], base_p: Sequence[RationalLike]) -> ShiftResult:
    """Shift a cubic identity by x so that the cubic residual in x vanishes.

    The residual of (A_i x + 1 | P_i x + 1) at k = 3 is
    x^3 (sum A^3 - sum P^3) + 3 x^2 (sum A^2 - sum P^2) + 3 x (sum A - sum P);
    with equal cubes the nonzero root is x = -(sum A - sum P) / (sum A^2 - sum P^2).
    """
    base_a, base_p = _six(base_a, "base_a"), _six(base_p, "base_p")
    cubes = power_sum(base_a, 3) - power_sum(base_p, 3)
    if cubes:
        raise PreconditionError("base sides have different sums of cubes", failing=[3], residual=cubes)

    residual = deg3_shift_template(base_a, base_p).residual(3)
    linear = residual.coefficient("x", 1).constant_value()
    quadratic = residual.coefficient("x", 2).constant_value()
    if not quadratic:
        if linear:
            raise DegenerateShiftError(
                "equal sums of squares but different sums: no finite shift",
                residual=linear / 3,
            )
        logger.info("deg3_shift_family: base is valid at k=1,2,3; x is unconstrained, using x=0")
        pair = PowerSumPair((1,) * 6, (1,) * 6, frozenset({3}), "deg3_shift_family degenerate")
        return ShiftResult(Fraction(0), pair)

    x = -linear / quadratic
    source = f"deg3_shift_family x={x}"
    return ShiftResult(x, instantiate(deg3_shift_template(base_a, base_p), {"x": x}, source))


@lru_cache(maxsize=None)
def deg3_symmetric_template() -> PolyPair:
    """Symbolic in A..F and x; valid exactly when A^2 + C^2 + E^2 = B^2 + D^2 + F^2."""
    a, b, c, d, e, f, x = MultiPoly.symbols("A B C D E F x")
    coeffs = (a, b, c, d, e, f)
    signs = (1, -1, 1, -1, 1, -1)
    lhs = tuple(v * x + s for v, s in zip(coeffs, signs, strict=True))
    rhs = tuple(v * x - s for v, s in zip(coeffs, signs, strict=True))
    return PolyPair(lhs, rhs, frozenset({3}), "deg3_symmetric_family")


def deg3_symmetric_condition() -> MultiPoly:
    a, b, c, d, e, f = MultiPoly.symbols("A B C D E F")
    return a**2 + c**2 + e**2 - b**2 - d**2 - f**2


def deg3_symmetric_family(
    a: RationalLike,
    b: RationalLike,
    c: RationalLike,
    d: RationalLike,
    e: RationalLike,
    f: RationalLike,
    x: RationalLike,
) -> PowerSumPair:
    coeffs = dict(zip("ABCDEF", (to_rational(v) for v in (a, b, c, d, e, f)), strict=True))
    gap = deg3_symmetric_condition().evaluate(coeffs)
    if gap:
        raise SymmetryConditionError(
            "A^2 + C^2 + E^2 != B^2 + D^2 + F^2",
            residual=gap,
            details={"coefficients": {k: str(v) for k, v in coeffs.items()}},
        )
    x = to_rational(x)
    source = "deg3_symmetric_family " + format_params(**{k: v for k, v in coeffs.items()}, x=x)
    return instantiate(deg3_symmetric_template(), {**coeffs, "x": x}, source)
