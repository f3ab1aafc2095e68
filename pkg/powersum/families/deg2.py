"""Degree 2: scaling the base solution along the conic x^2 + xy + y^2 = 931."""
from __future__ import annotations

from functools import lru_cache

from powersum.exactcore import MultiPoly, PolyPair, PowerSumPair, RationalLike, to_rational
from powersum.families.common import instantiate
from powersum.families.conic import line_intersection_numerators

# (1, 30, 31) are x, y, x + y for the conic point (30, 1)
DEG2_BASE_POINT = (30, 1)
DEG2_FIXED = (36, 7, 17)
DEG2_RHS = (3, 4, 19, 27, 34, 35)


@lru_cache(maxsize=None)
def deg2_template() -> PolyPair:
    """The family as polynomials in k, denominators k^2 + k + 1 cleared."""
    (k,) = MultiPoly.symbols("k")
    x, y, d = line_intersection_numerators(*DEG2_BASE_POINT, k)
    lhs = (x, y, x + y) + tuple(c * d for c in DEG2_FIXED)
    rhs = tuple(c * d for c in DEG2_RHS)
    return PolyPair(lhs, rhs, frozenset({2}), "deg2_family")


def deg2_family(k: RationalLike) -> PowerSumPair:
    k = to_rational(k)
    return instantiate(deg2_template(), {"k": k}, f"deg2_family k={k}")
