"""Degree 5: six quadratics in m whose fifth powers sum to 2 T^5 (m^2 + 3)^5.

Two bases are known to work. Equating the two six-term sides gives a 6-vs-6
family in m.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from functools import lru_cache

from powersum.errors import BaseInvariantError
from powersum.exactcore import MultiPoly, PolyPair, PowerSumPair, RationalLike, power_sum, to_rational
from powersum.families.common import instantiate

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Deg5Base:
    A: int
    B: int
    C: int
    D: int
    E: int
    F: int
    T: int

    @property
    def entries(self) -> tuple[int, ...]:
        return (self.A, self.B, self.C, self.D, self.E, self.F)

    def invariant_failures(self) -> list[str]:
        failures = []
        gap = power_sum(self.entries, 5) - 2 * self.T**5
        if gap:
            failures.append(f"A^5+...+F^5 - 2T^5 = {gap}")
        if not (self.A + self.B == self.C + self.D == self.E + self.F):
            failures.append(f"A+B, C+D, E+F = {self.A + self.B}, {self.C + self.D}, {self.E + self.F} are not equal")
        return failures

    def check(self) -> Deg5Base:
        failures = self.invariant_failures()
        if failures:
            raise BaseInvariantError("degree-5 base invariants fail: " + "; ".join(failures), details={"base": self})
        return self


DEG5_BASES = (
    Deg5Base(91, 7, -21, 119, 161, -63, 147),
    Deg5Base(159, -61, 127, -29, 81, 17, 147),
)


def deg5_uvw(b: int, d: int, f: int) -> tuple[int, int, int]:
    """Linear coefficients (U, V, W); they always satisfy U + V + W = 4(D - F)."""
    u = 2 * (d - f)
    v = 2 * (2 * d - 3 * b + f)
    w = 2 * (-d + 3 * b - 2 * f)
    return u, v, w


def deg5_half_template(base: Deg5Base) -> PolyPair:
    """Six quadratics in m against two copies of T(m^2 + 3); no checks."""
    (m,) = MultiPoly.symbols("m")
    u, v, w = deg5_uvw(base.B, base.D, base.F)
    lhs = (
        base.A * m**2 + u * m + 3 * base.B,
        base.B * m**2 - u * m + 3 * base.A,
        base.C * m**2 + v * m + 3 * base.D,
        base.D * m**2 - v * m + 3 * base.C,
        base.E * m**2 + w * m + 3 * base.F,
        base.F * m**2 - w * m + 3 * base.E,
    )
    rhs = (base.T * (m**2 + 3),) * 2
    return PolyPair(lhs, rhs, frozenset({5}), "deg5_half_identity")


@lru_cache(maxsize=None)
def _identity_residual(base: Deg5Base) -> MultiPoly:
    return deg5_half_template(base).residual(5)


def deg5_half_identity(base: Deg5Base, m: RationalLike) -> PowerSumPair:
    """6-vs-2 pair at m; the base must satisfy its invariants and the identity in m."""
    base.check()
    residual = _identity_residual(base)
    if not residual.is_zero():
        raise BaseInvariantError(
            "the quadratics do not give an identity in m for this base",
            residual=residual,
            details={"base": base},
        )
    m = to_rational(m)
    return instantiate(deg5_half_template(base), {"m": m}, f"deg5_half_identity m={m}")


def deg5_half_identity_general(base: Deg5Base, m: RationalLike) -> PowerSumPair:
    """Experimental: only the base invariants are enforced; the caller verifies the result."""
    base.check()
    if not _identity_residual(base).is_zero():
        logger.warning("base %s does not give an identity in m; the pair is unlikely to be valid", base)
    m = to_rational(m)
    return instantiate(deg5_half_template(base), {"m": m}, f"deg5_half_identity_general m={m}")


@lru_cache(maxsize=None)
def deg5_66_template() -> PolyPair:
    first, second = (deg5_half_template(base) for base in DEG5_BASES)
    return PolyPair(first.lhs, second.lhs, frozenset({5}), "deg5_66_family")


def deg5_66_family(m: RationalLike) -> PowerSumPair:
    m = to_rational(m)
    return instantiate(deg5_66_template(), {"m": m}, f"deg5_66_family m={m}")
