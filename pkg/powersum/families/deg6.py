"""Degree 6: twelve quadratic forms and the exploratory factorization cases."""
from __future__ import annotations

import logging
from dataclasses import dataclass
from functools import lru_cache

from powersum.errors import ConditionError
from powersum.exactcore import MultiPoly, PolyPair, PowerSumPair
from powersum.families.common import format_params, instantiate

logger = logging.getLogger(__name__)

# 6-vs-6 solution printed without generating parameters
DEG6_EXAMPLE_C = ((27, 85, 43, 73, 11, 49), (29, 83, 41, 45, 17, 77))

CASE_VARIABLES = ("a1", "b1", "b2", "a", "b", "c2")


@lru_cache(maxsize=None)
def deg6_template() -> PolyPair:
    """The family in u = k*b2 and v = a1; a symbolic identity at k = 6."""
    u, v = MultiPoly.symbols("u v")
    lhs = (
        7 * u**2 - 4 * v**2,
        -9 * u**2 - 32 * u * v - 68 * v**2,
        3 * u**2 + 20 * u * v + 44 * v**2,
        15 * u**2 + 20 * u * v - 28 * v**2,
        11 * u**2 - 20 * u * v - 52 * v**2,
        u**2 - 44 * u * v - 36 * v**2,
    )
    rhs = (
        -(u**2) - 16 * u * v - 36 * v**2,
        15 * u**2 + 16 * u * v + 28 * v**2,
        -9 * u**2 - 4 * u * v - 4 * v**2,
        11 * u**2 + 12 * u * v - 44 * v**2,
        7 * u**2 - 28 * u * v - 68 * v**2,
        -3 * u**2 - 52 * u * v - 52 * v**2,
    )
    return PolyPair(lhs, rhs, frozenset({6}), "deg6_family")


def deg6_family(a1: int, b2: int, k: int) -> PowerSumPair:
    if a1 == 0 and b2 == 0:
        raise ConditionError("deg6_family needs (a1, b2) != (0, 0)")
    return instantiate(deg6_template(), {"u": k * b2, "v": a1}, "deg6_family " + format_params(a1=a1, b2=b2, k=k))


# ---------------------------------------------------------------------------
# General linear forms and factorization cases
# ---------------------------------------------------------------------------


def deg6_linear_forms(m: int, n: int, p: int, q: int, r: int, t: int) -> PolyPair:
    """A_i against B_i, where each B_i flips the sign of the constant part of A_i.

    The substitutions a2 = m a1, a3 = n a1, a4 = p a1, c1 = q c2, c3 = r c2 and
    c4 = t c2 are already applied.
    """
    a1, b1, b2, a, b, c2 = MultiPoly.symbols(CASE_VARIABLES)
    a2, a3, a4 = m * a1, n * a1, p * a1
    c1, c3, c4 = q * c2, r * c2, t * c2
    linear = (a1 * a + b1 * b, a3 * a, a4 * a, a1 * a - b2 * b, a2 * a - b1 * b, a2 * a + b2 * b)
    constant = (-c1, c3, c4, c2, c2, c2)
    return PolyPair(
        tuple(x + c for x, c in zip(linear, constant, strict=True)),
        tuple(x - c for x, c in zip(linear, constant, strict=True)),
        frozenset({6}),
        "deg6_case " + format_params(m=m, n=n, p=p, q=q, r=r, t=t),
    )


def deg6_case_residual(m: int, n: int, p: int, q: int, r: int, t: int) -> MultiPoly:
    """Sum of A_i^6 - B_i^6 in (a1, b1, b2, a, b, c2)."""
    return deg6_linear_forms(m, n, p, q, r, t).residual(6)


@dataclass(frozen=True)
class Deg6Case:
    """One case with its printed product sign * a1 * a * c2 * F1 * F2.

    Each factor is given by its coefficients on
    (c2^2, a^2 a1^2, a1 a b2 b, b2^2 b^2).
    """

    params: tuple[int, int, int, int, int, int]
    sign: int
    first: tuple[int, int, int, int]
    second: tuple[int, int, int, int]

    def display(self) -> MultiPoly:
        a1, _b1, b2, a, b, c2 = MultiPoly.symbols(CASE_VARIABLES)
        monomials = (c2**2, a**2 * a1**2, a1 * a * b2 * b, b2**2 * b**2)

        def factor(coefficients: tuple[int, int, int, int]) -> MultiPoly:
            return sum((c * mono for c, mono in zip(coefficients, monomials, strict=True)), MultiPoly.constant(0))

        return self.sign * a1 * a * c2 * factor(self.first) * factor(self.second)


DEG6_CASES = (
    Deg6Case((3, 1, -1, -2, -6, 3), 240, (19, 4, 2, 1), (21, 6, 2, 1)),
    Deg6Case((3, 1, -1, -1, -5, 3), 240, (14, 6, 2, 1), (-12, 4, 2, 1)),
    Deg6Case((3, 1, -1, 2, -2, 3), 240, (5, 6, 2, 1), (-3, 4, 2, 1)),
    Deg6Case((3, 1, -1, 3, -3, 1), 240, (6, 6, 2, 1), (-4, 4, 2, 1)),
    Deg6Case((3, 2, -4, 3, 2, 2), -240, (5, 15, 2, 1), (3, 5, -2, -1)),
    Deg6Case((3, 3, -5, 3, 2, 2), -240, (3, 12, 2, -1), (5, 22, 2, 1)),
    Deg6Case((3, 4, -6, 3, 2, 2), -240, (3, 21, -2, -1), (5, 31, 2, 1)),
)


def deg6_case_table() -> tuple[Deg6Case, ...]:
    return DEG6_CASES


@dataclass(frozen=True)
class Deg6CaseReport:
    case: Deg6Case
    quotient: MultiPoly
    remainder: MultiPoly
    reduced_quotient: MultiPoly
    reduced_remainder: MultiPoly

    @property
    def divides(self) -> bool:
        return self.remainder.is_zero()

    @property
    def divides_without_b1(self) -> bool:
        return self.reduced_remainder.is_zero()

    @property
    def equals_without_b1(self) -> bool:
        """The residual with b1 = 0 is exactly the printed product."""
        return self.divides_without_b1 and self.reduced_quotient == 1


def deg6_case_report(case: Deg6Case) -> Deg6CaseReport:
    """Divide the case residual by its printed product, with b1 free and with b1 = 0.

    One polynomial is always a Groebner basis of the ideal it generates, so a
    zero remainder is equivalent to divisibility.
    """
    residual = deg6_case_residual(*case.params)
    display = case.display()
    quotient, remainder = residual.divmod(display)
    reduced_quotient, reduced_remainder = residual.substitute({"b1": 0}).divmod(display)
    report = Deg6CaseReport(case, quotient, remainder, reduced_quotient, reduced_remainder)
    logger.debug(
        "deg6 case %s: divides=%s divides_without_b1=%s",
        case.params,
        report.divides,
        report.divides_without_b1,
    )
    return report
