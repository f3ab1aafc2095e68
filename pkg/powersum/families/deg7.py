"""Degree 7: a 4-vs-4 identity valid at k = 2, 4, 6, translated and cancelled.

The even identity needs 15c^2 and 15d^2 to match two quadratic forms in (a, b).
Translating by t = -c makes four terms cancel in pairs, leaving a 6-vs-6
multigrade pair valid at k = 1, 3, 5, 7.
"""
from __future__ import annotations

import logging
from fractions import Fraction
from functools import lru_cache
from math import gcd

from powersum.errors import NotRepresentableError, PreconditionError
from powersum.exactcore import MultiPoly, PolyPair, PowerSumPair, rational_sqrt, to_rational, verify_pair
from powersum.families.common import format_params, instantiate, require_valid
from powersum.families.shift import odd_cancel_poly, shift_extend_poly

logger = logging.getLogger(__name__)

DEG7_VARIABLES = ("a", "b", "c", "d", "p", "q")


@lru_cache(maxsize=None)
def piezas_identity() -> PolyPair:
    """4-vs-4 pair in (a, b, c, d, p, q), valid at k = 2, 4, 6 under the conditions on c and d."""
    a, b, c, d, p, q = MultiPoly.symbols(DEG7_VARIABLES)
    lhs = (c + b * p + a * q, c - b * p - a * q, d + a * p - b * q, d - a * p + b * q)
    rhs = (c + b * p - a * q, c - b * p + a * q, d + a * p + b * q, d - a * p - b * q)
    return PolyPair(lhs, rhs, frozenset({2, 4, 6}), "piezas_identity")


def deg7_forms(p: int, q: int, a: int, b: int) -> tuple[Fraction, Fraction]:
    """The two right-hand sides that must equal 15c^2 and 15d^2."""
    c_form = (4 * q**2 - p**2) * b**2 + (4 * p**2 - q**2) * a**2
    d_form = (4 * p**2 - q**2) * b**2 + (4 * q**2 - p**2) * a**2
    return Fraction(c_form), Fraction(d_form)


def deg7_conditions(p: int, q: int, a: int, b: int) -> tuple[Fraction, Fraction]:
    """Nonnegative (c, d) with 15c^2 and 15d^2 equal to the two forms."""
    c_form, d_form = deg7_forms(p, q, a, b)
    c, d = rational_sqrt(c_form / 15), rational_sqrt(d_form / 15)
    if c is None or d is None:
        which = "c" if c is None else "d"
        raise NotRepresentableError(
            f"15{which}^2 has no rational solution for " + format_params(p=p, q=q, a=a, b=b),
            residual=c_form if c is None else d_form,
            details={"c_form": str(c_form), "d_form": str(d_form)},
        )
    return c, d


@lru_cache(maxsize=None)
def deg7_template() -> PolyPair:
    """Translate by t = -c and cancel symbolically.

    Cancelling on the polynomials keeps accidental numeric coincidences such
    as 19 and -19 on one side of a specific instance.
    """
    (c,) = MultiPoly.symbols("c")
    shifted = shift_extend_poly(piezas_identity(), -c)
    reduced = odd_cancel_poly(PolyPair(shifted.lhs, shifted.rhs, frozenset({1, 3, 5, 7}), "deg7_family"))
    logger.debug("deg7 template: %d vs %d terms after cancellation", len(reduced.lhs), len(reduced.rhs))
    return reduced


def deg7_family(p: int, q: int, a: int, b: int) -> PowerSumPair:
    """The 6-vs-6 pair at k = 1, 3, 5, 7 in the order the template produces.

    Unlike ``deg8_family`` and ``deg9_family`` the result is not canonicalized,
    so entries such as 19 and -19 stay where the forms put them. Pass it through
    ``canonicalize`` for comparison.
    """
    c, d = deg7_conditions(p, q, a, b)
    bindings = {"a": to_rational(a), "b": to_rational(b), "c": c, "d": d, "p": p, "q": q}
    even = piezas_identity().evaluate(bindings)
    report = verify_pair(even)
    if not report.passed:
        raise PreconditionError("4-vs-4 identity fails at these parameters", failing=report.failing)
    source = "deg7_family " + format_params(p=p, q=q, a=a, b=b, c=c, d=d)
    return require_valid(instantiate(deg7_template(), bindings, source), source)


def deg7_search(p: int, q: int, height: int) -> list[tuple[int, int, Fraction, Fraction]]:
    """Coprime (a, b) in [1, height]^2 for which both conditions are representable."""
    found = []
    for a in range(1, height + 1):
        for b in range(1, height + 1):
            if gcd(a, b) != 1:
                continue
            c_form, d_form = deg7_forms(p, q, a, b)
            if c_form % 15 or d_form % 15:
                continue
            c, d = rational_sqrt(c_form / 15), rational_sqrt(d_form / 15)
            if c is not None and d is not None:
                found.append((a, b, c, d))
    logger.info("deg7_search p=%d q=%d height=%d: %d parameter sets", p, q, height, len(found))
    return found
