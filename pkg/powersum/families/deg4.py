"""Degree 4: the same conic construction on x^2 + xy + y^2 = 238336."""
from __future__ import annotations

from functools import lru_cache

from powersum.exactcore import MultiPoly, PolyPair, PowerSumPair, RationalLike, to_rational
from powersum.families.common import instantiate
from powersum.families.conic import line_intersection_numerators

DEG4_BASE_POINT = (480, 16)
DEG4_FIXED = (532, 798, 1330)
DEG4_RHS = (342, 336, 224, 560, 950, 1292)


@lru_cache(maxsize=None)
def deg4_template() -> PolyPair:
    (k,) = MultiPoly.symbols("k")
    x, y, d = line_intersection_numerators(*DEG4_BASE_POINT, k)
    lhs = (-y, x + y, x) + tuple(c * d for c in DEG4_FIXED)
    rhs = tuple(c * d for c in DEG4_RHS)
    return PolyPair(lhs, rhs, frozenset({4}), "deg4_family")


def deg4_family(k: RationalLike) -> PowerSumPair:
    k = to_rational(k)
    return instantiate(deg4_template(), {"k": k}, f"deg4_family k={k}")
