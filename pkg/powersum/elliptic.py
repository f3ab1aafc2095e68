"""Rational points on long Weierstrass curves and bridges to quartic models.

A quartic model v^2 = q(u) with a rational point is birational to an elliptic
curve. Doubling on the curve side and mapping back produces new rational
points on the quartic, i.e. new family parameters for degrees 8 and 9.
"""
from __future__ import annotations

import abc
import logging
from collections.abc import Iterable
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Optional

import numpy as np
import sympy

from powersum.errors import CurveError, ExceptionalPointError, OffCurveError, SingularCurveError
from powersum.exactcore import MultiPoly, RationalLike, rational_sqrt, to_rational
from powersum.families.deg9 import deg9_quartic_rhs

logger = logging.getLogger(__name__)


# ---------------------------------------------------------------------------
# Points and curves
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class CurvePoint:
    """Affine point, or the point at infinity when both coordinates are None."""

    x: Optional[Fraction] = None
    y: Optional[Fraction] = None

    def __post_init__(self):
        if (self.x is None) != (self.y is None):
            raise ValueError("a curve point needs both coordinates or neither")
        if self.x is not None:
            object.__setattr__(self, "x", to_rational(self.x))
            object.__setattr__(self, "y", to_rational(self.y))

    @classmethod
    def infinity(cls) -> CurvePoint:
        return cls()

    @property
    def is_infinity(self) -> bool:
        return self.x is None

    def __str__(self) -> str:
        return "O" if self.is_infinity else f"({self.x}, {self.y})"


INFINITY = CurvePoint()


@dataclass(frozen=True)
class CurveInvariants:
    b2: Fraction
    b4: Fraction
    b6: Fraction
    b8: Fraction
    c4: Fraction
    c6: Fraction
    discriminant: Fraction
    j: Optional[Fraction]


def _invariants(a1, a2, a3, a4, a6) -> CurveInvariants:
    b2 = a1**2 + 4 * a2
    b4 = 2 * a4 + a1 * a3
    b6 = a3**2 + 4 * a6
    b8 = a1**2 * a6 + 4 * a2 * a6 - a1 * a3 * a4 + a2 * a3**2 - a4**2
    c4 = b2**2 - 24 * b4
    c6 = -(b2**3) + 36 * b2 * b4 - 216 * b6
    disc = -(b2**2) * b8 - 8 * b4**3 - 27 * b6**2 + 9 * b2 * b4 * b6
    j = c4**3 / disc if disc else None
    return CurveInvariants(b2, b4, b6, b8, c4, c6, disc, j)


@dataclass(frozen=True)
class WeierstrassCurve:
    """y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6 over the rationals."""

    a1: Fraction
    a2: Fraction
    a3: Fraction
    a4: Fraction
    a6: Fraction

    def __post_init__(self):
        for name in ("a1", "a2", "a3", "a4", "a6"):
            object.__setattr__(self, name, to_rational(getattr(self, name)))
        if not self.invariants().discriminant:
            raise SingularCurveError(f"curve {self} is singular")

    @property
    def coefficients(self) -> tuple[Fraction, ...]:
        return self.a1, self.a2, self.a3, self.a4, self.a6

    def invariants(self) -> CurveInvariants:
        return _invariants(*self.coefficients)

    @property
    def discriminant(self) -> Fraction:
        return self.invariants().discriminant

    def __str__(self) -> str:
        a1, a2, a3, a4, a6 = self.coefficients
        return f"y^2 + {a1}xy + {a3}y = x^3 + {a2}x^2 + {a4}x + {a6}"

    # -- group law ------------------------------------------------------------

    def contains(self, pt: CurvePoint) -> bool:
        if pt.is_infinity:
            return True
        x, y = pt.x, pt.y
        a1, a2, a3, a4, a6 = self.coefficients
        return y**2 + a1 * x * y + a3 * y == x**3 + a2 * x**2 + a4 * x + a6

    def point(self, x: RationalLike, y: RationalLike) -> CurvePoint:
        pt = CurvePoint(to_rational(x), to_rational(y))
        self._require(pt)
        return pt

    def _require(self, *points: CurvePoint) -> None:
        for pt in points:
            if not self.contains(pt):
                raise OffCurveError(f"{pt} is not on {self}")

    def negate(self, pt: CurvePoint) -> CurvePoint:
        self._require(pt)
        if pt.is_infinity:
            return pt
        return CurvePoint(pt.x, -pt.y - self.a1 * pt.x - self.a3)

    def add(self, p: CurvePoint, q: CurvePoint) -> CurvePoint:
        self._require(p, q)
        if p.is_infinity:
            return q
        if q.is_infinity:
            return p
        a1, a2, a3, a4, a6 = self.coefficients
        if p.x == q.x:
            if p.y + q.y + a1 * q.x + a3 == 0:
                return INFINITY
            denominator = 2 * p.y + a1 * p.x + a3
            slope = (3 * p.x**2 + 2 * a2 * p.x + a4 - a1 * p.y) / denominator
        else:
            slope = (q.y - p.y) / (q.x - p.x)
        intercept = p.y - slope * p.x
        x3 = slope**2 + a1 * slope - a2 - p.x - q.x
        y3 = -(slope + a1) * x3 - intercept - a3
        return CurvePoint(x3, y3)

    def double(self, pt: CurvePoint) -> CurvePoint:
        return self.add(pt, pt)

    def multiply(self, pt: CurvePoint, n: int) -> CurvePoint:
        """n * pt by double-and-add; negative n uses the inverse."""
        if n < 0:
            return self.multiply(self.negate(pt), -n)
        result, addend = INFINITY, pt
        while n:
            if n & 1:
                result = self.add(result, addend)
            addend = self.double(addend)
            n >>= 1
        return result


def on_curve(curve: WeierstrassCurve, pt: CurvePoint) -> bool:
    return curve.contains(pt)


def point_add(curve: WeierstrassCurve, p: CurvePoint, q: CurvePoint) -> CurvePoint:
    return curve.add(p, q)


def point_double(curve: WeierstrassCurve, pt: CurvePoint) -> CurvePoint:
    return curve.double(pt)


def point_negate(curve: WeierstrassCurve, pt: CurvePoint) -> CurvePoint:
    return curve.negate(pt)


def scalar_mul(curve: WeierstrassCurve, pt: CurvePoint, n: int) -> CurvePoint:
    return curve.multiply(pt, n)


def integrality_check(pt: CurvePoint) -> bool:
    """True iff both coordinates are integers.

    A non-integral multiple on an integral model rules out finite order; this
    is recorded as evidence, not proved.
    """
    if pt.is_infinity:
        raise ValueError("integrality_check needs an affine point")
    return pt.x.denominator == 1 and pt.y.denominator == 1


def curve_points_real(
    curve: WeierstrassCurve, x_range: tuple[float, float], samples: int = 600
) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Sample the real locus: x values and the two y branches (NaN where empty)."""
    a1, a2, a3, a4, a6 = (float(c) for c in curve.coefficients)
    xs = np.linspace(x_range[0], x_range[1], samples)
    linear = a1 * xs + a3
    disc = linear**2 + 4 * (xs**3 + a2 * xs**2 + a4 * xs + a6)
    root = np.sqrt(np.where(disc >= 0, disc, np.nan))
    return xs, (-linear + root) / 2, (-linear - root) / 2


# ---------------------------------------------------------------------------
# Isomorphisms between Weierstrass models
# ---------------------------------------------------------------------------


def _rational_root(value: Fraction, degree: int) -> Fraction | None:
    if value <= 0:
        return None
    num, num_exact = sympy.integer_nthroot(value.numerator, degree)
    den, den_exact = sympy.integer_nthroot(value.denominator, degree)
    if not (num_exact and den_exact):
        return None
    return Fraction(int(num), int(den))


@dataclass(frozen=True)
class CurveIsomorphism:
    """Isomorphism source -> target through the short models.

    Short coordinates are X = 36x + 3 b2 and Y = 108(2y + a1 x + a3); the
    target's are the source's scaled by u^-2 and u^-3, with u > 0.
    """

    source: WeierstrassCurve
    target: WeierstrassCurve
    u: Fraction

    @classmethod
    def between(cls, source: WeierstrassCurve, target: WeierstrassCurve) -> CurveIsomorphism:
        src, tgt = source.invariants(), target.invariants()
        if src.j != tgt.j:
            raise CurveError(f"j-invariants differ ({src.j} vs {tgt.j}); the curves are not isomorphic")
        if src.c4 and src.c6:
            u = rational_sqrt(src.c6 * tgt.c4 / (tgt.c6 * src.c4))
        elif src.c6:
            u = _rational_root(src.c6 / tgt.c6, 6)
        else:
            u = _rational_root(src.c4 / tgt.c4, 4)
        if u is None or src.c4 != u**4 * tgt.c4 or src.c6 != u**6 * tgt.c6:
            raise CurveError("curves are twists of each other, not isomorphic over the rationals")
        return cls(source, target, u)

    @staticmethod
    def _to_short(curve: WeierstrassCurve, pt: CurvePoint) -> tuple[Fraction, Fraction]:
        b2 = curve.invariants().b2
        return 36 * pt.x + 3 * b2, 108 * (2 * pt.y + curve.a1 * pt.x + curve.a3)

    @staticmethod
    def _from_short(curve: WeierstrassCurve, big_x: Fraction, big_y: Fraction) -> CurvePoint:
        b2 = curve.invariants().b2
        x = (big_x - 3 * b2) / 36
        y = (big_y / 108 - curve.a1 * x - curve.a3) / 2
        return CurvePoint(x, y)

    def forward(self, pt: CurvePoint) -> CurvePoint:
        if pt.is_infinity:
            return pt
        big_x, big_y = self._to_short(self.source, pt)
        return self._from_short(self.target, big_x / self.u**2, big_y / self.u**3)

    def backward(self, pt: CurvePoint) -> CurvePoint:
        if pt.is_infinity:
            return pt
        big_x, big_y = self._to_short(self.target, pt)
        return self._from_short(self.source, big_x * self.u**2, big_y * self.u**3)


# ---------------------------------------------------------------------------
# Quartic models and bridges
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class QuarticPoint:
    u: Fraction
    v: Fraction

    def __post_init__(self):
        object.__setattr__(self, "u", to_rational(self.u))
        object.__setattr__(self, "v", to_rational(self.v))

    def __str__(self) -> str:
        return f"({self.u}, {self.v})"


@dataclass(frozen=True)
class QuarticModel:
    """v^2 = c4 u^4 + c3 u^3 + c2 u^2 + c1 u + c0 with a squarefree right-hand side."""

    c4: Fraction
    c3: Fraction
    c2: Fraction
    c1: Fraction
    c0: Fraction

    def __post_init__(self):
        for name in ("c4", "c3", "c2", "c1", "c0"):
            object.__setattr__(self, name, to_rational(getattr(self, name)))
        if not self.c4 and not self.c3:
            raise SingularCurveError("quartic model needs degree 3 or 4")
        poly = sympy.Poly([sympy.Rational(c.numerator, c.denominator) for c in self.coefficients], sympy.Symbol("u"))
        if poly.discriminant() == 0:
            raise SingularCurveError(f"right-hand side of {self} has a repeated root")

    @property
    def coefficients(self) -> tuple[Fraction, ...]:
        return self.c4, self.c3, self.c2, self.c1, self.c0

    def value(self, u: RationalLike) -> Fraction:
        u = to_rational(u)
        total = Fraction(0)
        for c in self.coefficients:
            total = total * u + c
        return total

    def contains(self, pt: QuarticPoint) -> bool:
        return pt.v**2 == self.value(pt.u)

    def point(self, u: RationalLike, v: RationalLike) -> QuarticPoint:
        pt = QuarticPoint(u, v)
        if not self.contains(pt):
            raise OffCurveError(f"{pt} is not on {self}")
        return pt

    def poly(self) -> MultiPoly:
        (u,) = MultiPoly.symbols("u")
        return sum((c * u ** (4 - i) for i, c in enumerate(self.coefficients)), MultiPoly.constant(0))

    def rational_roots(self) -> list[Fraction]:
        return self.poly().rational_roots("u")

    def shifted(self, origin: Fraction) -> tuple[Fraction, ...]:
        """Coefficients (s^4 .. s^0) of the right-hand side at u = origin + s."""
        (s,) = MultiPoly.symbols("s")
        shifted = self.poly().substitute({"u": origin + s})
        return tuple(shifted.coefficient("s", power).constant_value() for power in range(4, -1, -1))

    def __str__(self) -> str:
        c4, c3, c2, c1, c0 = self.coefficients
        return f"v^2 = {c4}u^4 + {c3}u^3 + {c2}u^2 + {c1}u + {c0}"


class QuarticBridge(abc.ABC):
    """A pair of inverse rational maps between a quartic model and a curve."""

    model: QuarticModel
    curve: WeierstrassCurve

    @abc.abstractmethod
    def to_curve(self, pt: QuarticPoint) -> CurvePoint:
        """Raise ExceptionalPointError where the map is undefined."""

    @abc.abstractmethod
    def to_quartic(self, pt: CurvePoint) -> QuarticPoint:
        """Raise ExceptionalPointError where the map is undefined."""

    def lift(self, pt: QuarticPoint) -> CurvePoint:
        """to_curve, falling back on the designated image of an exceptional point."""
        if not self.model.contains(pt):
            raise OffCurveError(f"{pt} is not on {self.model}")
        try:
            return self.to_curve(pt)
        except ExceptionalPointError as exc:
            if exc.designated is None:
                raise
            logger.debug("using designated image %s for exceptional point %s", exc.designated, pt)
            return exc.designated

    def project(self, pt: CurvePoint) -> QuarticPoint:
        self.curve._require(pt)
        image = self.to_quartic(pt)
        if not self.model.contains(image):
            raise CurveError(f"bridge sent {pt} to {image}, which is off the model")
        return image


class Deg8Bridge(QuarticBridge):
    """The published maps between v^2 = 25u^4 + ... + 25600 and Y^2 = X^3 + X^2 - 920X + 10404."""

    def __init__(self):
        self.model = deg8_model()
        self.curve = deg8_curve()

    def to_curve(self, pt: QuarticPoint) -> CurvePoint:
        return deg8_quartic_to_weier(pt.u, pt.v)

    def to_quartic(self, pt: CurvePoint) -> QuarticPoint:
        if pt.is_infinity:
            raise ExceptionalPointError("the point at infinity has no image on the quartic", point=pt)
        return deg8_weier_to_quartic(pt.x, pt.y)


class PointBridge(QuarticBridge):
    """Classical construction based at a rational point (u0, v0) with v0 != 0.

    With s = u - u0 and v^2 = a s^4 + b s^3 + c s^2 + d s + q^2 (q = v0), the
    curve has a1 = d/q, a2 = c - d^2/(4q^2), a3 = 2qb, a4 = -4q^2 a and
    a6 = a2 a4. The base point goes to infinity and (u0, -v0) to (-a2, a1 a2 - a3).
    """

    def __init__(self, model: QuarticModel, base: QuarticPoint):
        if not model.contains(base):
            raise OffCurveError(f"{base} is not on {model}")
        if not base.v:
            raise CurveError("PointBridge needs v0 != 0; use RootBridge at a root")
        self.model = model
        self.base = base
        self.shifted = model.shifted(base.u)
        a, b, c, d, _ = self.shifted
        q = base.v
        a1 = d / q
        a2 = c - d**2 / (4 * q**2)
        a3 = 2 * q * b
        a4 = -4 * q**2 * a
        self.curve = WeierstrassCurve(a1, a2, a3, a4, a2 * a4)

    def to_curve(self, pt: QuarticPoint) -> CurvePoint:
        _, _, c, d, _ = self.shifted
        q = self.base.v
        s, v = pt.u - self.base.u, pt.v
        if not s:
            if v == q:
                return INFINITY
            return CurvePoint(-self.curve.a2, self.curve.a1 * self.curve.a2 - self.curve.a3)
        x = (2 * q * (v + q) + d * s) / s**2
        y = (4 * q**2 * (v + q) + 2 * q * (d * s + c * s**2) - d**2 * s**2 / (2 * q)) / s**3
        return CurvePoint(x, y)

    def to_quartic(self, pt: CurvePoint) -> QuarticPoint:
        _, _, c, d, _ = self.shifted
        q = self.base.v
        if pt.is_infinity:
            return self.base
        if not pt.y:
            raise ExceptionalPointError(f"{pt} has y = 0; no quartic image", point=pt)
        s = (2 * q * (pt.x + c) - d**2 / (2 * q)) / pt.y
        v = -q + s * (s * pt.x - d) / (2 * q)
        return QuarticPoint(self.base.u + s, v)


class RootBridge(QuarticBridge):
    """Construction based at a rational root r of the quartic.

    With s = u - r, v^2 = a s^4 + b s^3 + c s^2 + d s, and X = d/s, Y = d v/s^2
    lands on Y^2 = X^3 + c X^2 + bd X + a d^2. The root itself goes to infinity.
    """

    def __init__(self, model: QuarticModel, root: RationalLike):
        root = to_rational(root)
        if model.value(root):
            raise CurveError(f"{root} is not a root of {model}")
        self.model = model
        self.root = root
        self.shifted = model.shifted(root)
        a, b, c, d, _ = self.shifted
        self.curve = WeierstrassCurve(0, c, 0, b * d, a * d**2)

    def to_curve(self, pt: QuarticPoint) -> CurvePoint:
        d = self.shifted[3]
        s = pt.u - self.root
        if not s:
            return INFINITY
        return CurvePoint(d / s, d * pt.v / s**2)

    def to_quartic(self, pt: CurvePoint) -> QuarticPoint:
        d = self.shifted[3]
        if pt.is_infinity:
            return QuarticPoint(self.root, 0)
        if not pt.x:
            raise ExceptionalPointError(f"{pt} corresponds to u = infinity", point=pt)
        return QuarticPoint(self.root + d / pt.x, pt.y * d / pt.x**2)


class ComposedBridge(QuarticBridge):
    """A bridge followed by an isomorphism onto another model of its curve."""

    def __init__(self, inner: QuarticBridge, isomorphism: CurveIsomorphism):
        if isomorphism.source != inner.curve:
            raise CurveError("isomorphism does not start at the bridge's curve")
        self.inner = inner
        self.isomorphism = isomorphism
        self.model = inner.model
        self.curve = isomorphism.target

    def to_curve(self, pt: QuarticPoint) -> CurvePoint:
        return self.isomorphism.forward(self.inner.to_curve(pt))

    def to_quartic(self, pt: CurvePoint) -> QuarticPoint:
        return self.inner.to_quartic(self.isomorphism.backward(pt))


def bridge_for(
    model: QuarticModel,
    target: WeierstrassCurve | None = None,
    point: QuarticPoint | None = None,
) -> QuarticBridge:
    """Prefer a rational root of the quartic; otherwise base the bridge at ``point``."""
    roots = model.rational_roots()
    if roots:
        bridge: QuarticBridge = RootBridge(model, roots[0])
        logger.debug("bridge for %s based at root %s", model, roots[0])
    elif point is not None:
        bridge = PointBridge(model, point)
        logger.debug("bridge for %s based at point %s", model, point)
    else:
        raise CurveError(f"{model} has no rational root and no base point was given")
    if target is not None:
        bridge = ComposedBridge(bridge, CurveIsomorphism.between(bridge.curve, target))
    return bridge


# ---------------------------------------------------------------------------
# Degree-8 fixtures and maps
# ---------------------------------------------------------------------------

DEG8_Q = CurvePoint(Fraction(406, 25), Fraction(-396, 125))
DEG8_BASE = QuarticPoint(0, 160)


@lru_cache(maxsize=None)
def deg8_model() -> QuarticModel:
    return QuarticModel(25, 144, -1280, -4608, 25600)


@lru_cache(maxsize=None)
def deg8_curve() -> WeierstrassCurve:
    return WeierstrassCurve(0, 1, 0, -920, 10404)


@lru_cache(maxsize=None)
def deg8_bridge() -> Deg8Bridge:
    return Deg8Bridge()


def deg8_weier_to_quartic(x: RationalLike, y: RationalLike) -> QuarticPoint:
    x, y = to_rational(x), to_rational(y)
    denominator = 5 * y + 9 * x - 162
    if not denominator:
        raise ExceptionalPointError(f"5Y + 9X - 162 vanishes at ({x}, {y})", point=CurvePoint(x, y))
    u = (200 * x - 3248) / denominator
    v = (25344 * y - 194880 * x**2 + 3550080 * x - 23468800 + 4000 * x**3) / denominator**2
    return QuarticPoint(u, v)


def deg8_quartic_to_weier(u: RationalLike, v: RationalLike) -> CurvePoint:
    """Inverse map. Both (0, 160) and (0, -160) are exceptional and designate Q."""
    u, v = to_rational(u), to_rational(v)
    if not u:
        designated = DEG8_Q if v in (160, -160) else None
        raise ExceptionalPointError(f"U = 0 at ({u}, {v})", point=QuarticPoint(u, v), designated=designated)
    x = (5 * v + 800 - 72 * u - 7 * u**2) / u**2
    y = (200 * v + 32000 - 4320 * u - 800 * u**2 - 9 * v * u + 45 * u**3) / u**3
    return CurvePoint(x, y)


# ---------------------------------------------------------------------------
# Degree-9 fixtures
# ---------------------------------------------------------------------------

DEG9_P = CurvePoint(Fraction(1026337, 64), Fraction(-1026359837, 512))
DEG9_AB = (3, 4)


@lru_cache(maxsize=None)
def deg9_model(a: int = 3, b: int = 4) -> QuarticModel:
    return QuarticModel(*deg9_quartic_rhs(a, b))


@lru_cache(maxsize=None)
def deg9_curve() -> WeierstrassCurve:
    return WeierstrassCurve(1, 0, 1, -7166374, -22875861928)


@lru_cache(maxsize=None)
def deg9_bridge() -> QuarticBridge:
    return bridge_for(deg9_model(*DEG9_AB), target=deg9_curve())


# ---------------------------------------------------------------------------
# Doubling and parameter generation on the quartic
# ---------------------------------------------------------------------------


def default_bridge(model: QuarticModel, base: QuarticPoint | None = None) -> QuarticBridge:
    """The registered bridge for the published models, else one built by ``bridge_for``."""
    if model == deg8_model():
        return deg8_bridge()
    if model == deg9_model(*DEG9_AB):
        return deg9_bridge()
    return bridge_for(model, point=base)


def quartic_double(model: QuarticModel, pt: QuarticPoint, bridge: QuarticBridge | None = None) -> QuarticPoint:
    """Image of 2 * pt computed on the curve side of the bridge."""
    bridge = bridge or default_bridge(model, pt)
    doubled = bridge.curve.double(bridge.lift(pt))
    return bridge.project(doubled)


def generate_parameters(
    model: QuarticModel,
    base: QuarticPoint,
    count: int,
    bridge: QuarticBridge | None = None,
) -> list[QuarticPoint]:
    """Quartic images of 2P, 4P, ... for the curve point P over ``base``.

    Multiples that hit an exceptional locus are skipped, so the result may
    come from higher multiples than the first ``count``.
    """
    if count <= 0:
        return []
    bridge = bridge or default_bridge(model, base)
    start = bridge.lift(base)
    step = bridge.curve.double(start)
    current = step
    points: list[QuarticPoint] = []
    multiple = 2
    attempts = 0
    while len(points) < count and attempts < 4 * count + 8:
        attempts += 1
        try:
            points.append(bridge.project(current))
        except ExceptionalPointError:
            logger.warning("skipping %dP: exceptional for the bridge", multiple)
        current = bridge.curve.add(current, step)
        multiple += 2
    return points


def curve_multiples(curve: WeierstrassCurve, pt: CurvePoint, count: int) -> Iterable[tuple[int, CurvePoint]]:
    """(n, nP) for n = 1 .. count."""
    current = INFINITY
    for n in range(1, count + 1):
        current = curve.add(current, pt)
        yield n, current
