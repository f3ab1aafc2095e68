"""Translation of even-degree identities and cancellation for odd-degree pairs.

If two lists agree in their power sums for k = 2, 4, ..., 2n, then the lists
{t + a_i} u {t - a_i} and {t + b_i} u {t - b_i} agree for every k = 1 .. 2n+1.
With all-odd degrees, v and -v on one side cancel, and so does a value that
appears on both sides.
"""
from __future__ import annotations

import logging
from collections.abc import Sequence
from typing import Any, TypeVar

from powersum.errors import PreconditionError
from powersum.exactcore import (
    MultiPoly,
    PolyPair,
    PowerSumPair,
    RationalLike,
    to_rational,
    verify_pair,
)

logger = logging.getLogger(__name__)

V = TypeVar("V")


def required_even_degrees(degrees: frozenset[int]) -> list[int]:
    """2, 4, ..., 2n where 2n is the largest even degree given."""
    top = max((k for k in degrees if k % 2 == 0), default=0)
    return list(range(2, top + 1, 2))


def _translate(values: Sequence[Any], t: Any) -> tuple[Any, ...]:
    return tuple(t + v for v in values) + tuple(t - v for v in values)


def shift_extend(pair: PowerSumPair, t: RationalLike) -> PowerSumPair:
    """Translate an even-degree pair into one valid at k = 1 .. 2n+1."""
    evens = required_even_degrees(pair.degrees)
    if not evens:
        raise PreconditionError("shift_extend needs a pair valid at even degrees", failing=sorted(pair.degrees))
    report = verify_pair(pair, evens)
    if not report.passed:
        raise PreconditionError(
            f"input pair is not valid at k={report.failing}",
            failing=report.failing,
            residual=report.residuals[report.failing[0]],
        )
    t = to_rational(t)
    top = evens[-1] + 1
    logger.debug("shift_extend t=%s degrees 1..%d", t, top)
    return PowerSumPair(
        _translate(pair.lhs, t),
        _translate(pair.rhs, t),
        frozenset(range(1, top + 1)),
        f"shift_extend({pair.source or 'pair'}) t={t}",
    )


def shift_extend_poly(pair: PolyPair, t: Any) -> PolyPair:
    """Symbolic translation; the even-degree precondition is the caller's to check."""
    evens = required_even_degrees(pair.degrees)
    if not evens:
        raise PreconditionError("shift_extend needs a pair valid at even degrees", failing=sorted(pair.degrees))
    t = MultiPoly.coerce(t)
    return PolyPair(
        _translate(pair.lhs, t),
        _translate(pair.rhs, t),
        frozenset(range(1, evens[-1] + 2)),
        pair.source,
    )


def _cancel_opposites(values: Sequence[V]) -> list[V]:
    kept: list[V] = []
    for value in values:
        for i, other in enumerate(kept):
            if other == -value:
                del kept[i]
                break
        else:
            kept.append(value)
    return kept


def cancel_terms(lhs: Sequence[V], rhs: Sequence[V]) -> tuple[list[V], list[V]]:
    """Drop v, -v pairs within a side, then values shared by both sides."""
    left, right = _cancel_opposites(lhs), _cancel_opposites(rhs)
    remaining = list(right)
    kept_left = []
    for value in left:
        for i, other in enumerate(remaining):
            if other == value:
                del remaining[i]
                break
        else:
            kept_left.append(value)
    return kept_left, remaining


def _require_odd(degrees: frozenset[int]) -> None:
    evens = sorted(k for k in degrees if k % 2 == 0)
    if evens:
        raise PreconditionError(f"odd_cancel needs all-odd degrees, got even k={evens}", failing=evens)


def odd_cancel(pair: PowerSumPair) -> PowerSumPair:
    _require_odd(pair.degrees)
    left, right = cancel_terms(pair.lhs, pair.rhs)
    return PowerSumPair(tuple(left), tuple(right), pair.degrees, pair.source)


def odd_cancel_poly(pair: PolyPair) -> PolyPair:
    """Cancellation on symbolic entries; only identical polynomials cancel."""
    _require_odd(pair.degrees)
    left, right = cancel_terms(pair.lhs, pair.rhs)
    return PolyPair(tuple(left), tuple(right), pair.degrees, pair.source)
