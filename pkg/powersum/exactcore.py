"""Exact arithmetic, polynomial algebra and power-sum pairs.

Scalars are :class:`fractions.Fraction` throughout. Polynomials wrap sympy's
sparse ``PolyRing`` elements over QQ; every ring is keyed by its ordered tuple of
variable names and operands living in different rings are lifted into the union
of their variables before any arithmetic.
"""
from __future__ import annotations

import enum
import logging
import numbers
import re
from collections.abc import Iterable, Mapping, Sequence
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache, reduce
from math import gcd, lcm
from typing import Any, Union

import sympy
from sympy import QQ
from sympy.polys.rings import PolyElement, PolyRing

from powersum.errors import PolyDomainError

logger = logging.getLogger(__name__)

Rational = Fraction
RationalLike = Union[int, Fraction, str]

_RATIONAL_TEXT = re.compile(r"^\s*([+-]?\d+)\s*(?:/\s*(\d+))?\s*$")


# ---------------------------------------------------------------------------
# Scalars
# ---------------------------------------------------------------------------


def to_rational(value: Any) -> Fraction:
    """Coerce ints, Fractions, ``p/q`` strings and other exact rationals."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rational(value)
    if isinstance(value, numbers.Rational):
        return Fraction(int(value.numerator), int(value.denominator))
    if hasattr(value, "numerator") and hasattr(value, "denominator"):
        # gmpy2 / sympy ground types
        return Fraction(int(value.numerator), int(value.denominator))
    raise TypeError(f"cannot use {type(value).__name__} as an exact rational")


def parse_rational(text: str) -> Fraction:
    """Parse ``"27/41"``, ``"-3"`` or ``"+5"``. Decimals are rejected."""
    match = _RATIONAL_TEXT.match(text)
    if not match:
        raise ValueError(f"not a rational number: {text!r} (expected p or p/q)")
    numerator, denominator = match.groups()
    if denominator is not None and int(denominator) == 0:
        raise ValueError(f"zero denominator in {text!r}")
    return Fraction(int(numerator), int(denominator or 1))


def rational_sqrt(value: RationalLike) -> Fraction | None:
    """Exact square root of a rational square, else None."""
    x = to_rational(value)
    if x < 0:
        return None
    num, num_exact = sympy.integer_nthroot(x.numerator, 2)
    den, den_exact = sympy.integer_nthroot(x.denominator, 2)
    if not (num_exact and den_exact):
        return None
    return Fraction(int(num), int(den))


def _to_ground(value: Fraction):
    return QQ(value.numerator, value.denominator)


def _from_ground(coeff) -> Fraction:
    return Fraction(int(coeff.numerator), int(coeff.denominator))


# ---------------------------------------------------------------------------
# MultiPoly
# ---------------------------------------------------------------------------


@lru_cache(maxsize=None)
def _ring(names: tuple[str, ...]) -> PolyRing:
    return PolyRing(names, QQ)


def _names(ring: PolyRing) -> tuple[str, ...]:
    return tuple(str(symbol) for symbol in ring.symbols)


class MultiPoly:
    """Sparse multivariate polynomial with rational coefficients.

    Instances are immutable. Equality and hashing ignore variables that do not
    occur, so ``x - x`` in ring (x, y) equals the constant 0 in the empty ring.
    """

    __slots__ = ("_element",)

    def __init__(self, element: PolyElement):
        self._element = element

    # -- construction -------------------------------------------------------

    @classmethod
    def symbol(cls, name: str) -> MultiPoly:
        ring = _ring((name,))
        return cls(ring.gens[0])

    @classmethod
    def symbols(cls, names: str | Sequence[str]) -> tuple[MultiPoly, ...]:
        """``MultiPoly.symbols("a b t")`` -> generators sharing one ring."""
        if isinstance(names, str):
            names = tuple(part for part in re.split(r"[\s,]+", names) if part)
        ring = _ring(tuple(names))
        return tuple(cls(gen) for gen in ring.gens)

    @classmethod
    def constant(cls, value: RationalLike) -> MultiPoly:
        ring = _ring(())
        return cls(ring.ground_new(_to_ground(to_rational(value))))

    @classmethod
    def from_terms(cls, variables: Sequence[str], terms: Mapping[tuple[int, ...], RationalLike]) -> MultiPoly:
        ring = _ring(tuple(variables))
        rep = {}
        for monom, coeff in terms.items():
            if len(monom) != ring.ngens:
                raise PolyDomainError(f"monomial {monom} does not match variables {tuple(variables)}")
            value = to_rational(coeff)
            if value:
                rep[tuple(int(e) for e in monom)] = _to_ground(value)
        return cls(ring.from_dict(rep) if rep else ring.zero)

    @classmethod
    def coerce(cls, value: Any) -> MultiPoly:
        if isinstance(value, MultiPoly):
            return value
        return cls.constant(to_rational(value))

    # -- inspection ---------------------------------------------------------

    @property
    def element(self) -> PolyElement:
        return self._element

    @property
    def variables(self) -> tuple[str, ...]:
        return _names(self._element.ring)

    @property
    def terms(self) -> dict[tuple[int, ...], Fraction]:
        return {monom: _from_ground(coeff) for monom, coeff in self._element.items()}

    def occurring(self) -> tuple[str, ...]:
        """Variables with a nonzero exponent in some term."""
        names = self.variables
        used = set()
        for monom in self._element:
            used.update(i for i, e in enumerate(monom) if e)
        return tuple(names[i] for i in sorted(used))

    def is_zero(self) -> bool:
        return not self._element

    def is_constant(self) -> bool:
        return self._element.is_ground

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise PolyDomainError(f"not a constant: {self}; free variables {self.occurring()}")
        if not self._element:
            return Fraction(0)
        return _from_ground(self._element[self._element.ring.zero_monom])

    def degree(self, name: str) -> int:
        """Degree in ``name``; -1 for the zero polynomial."""
        if not self._element:
            return -1
        if name not in self.variables:
            return 0
        index = self.variables.index(name)
        return max(monom[index] for monom in self._element)

    def total_degree(self) -> int:
        if not self._element:
            return -1
        return max(sum(monom) for monom in self._element)

    def coefficient(self, name: str, power: int) -> MultiPoly:
        """Coefficient of ``name**power`` as a polynomial in the other variables."""
        names = self.variables
        if name not in names:
            return self if power == 0 else MultiPoly(_ring(names).zero)
        index = names.index(name)
        rest = names[:index] + names[index + 1:]
        ring = _ring(rest)
        rep = {}
        for monom, coeff in self._element.items():
            if monom[index] == power:
                rep[monom[:index] + monom[index + 1:]] = coeff
        return MultiPoly(ring.from_dict(rep) if rep else ring.zero)

    def coefficients(self, name: str) -> list[MultiPoly]:
        """Coefficients in ``name`` from the constant term upwards."""
        return [self.coefficient(name, power) for power in range(self.degree(name) + 1)]

    def _canonical_terms(self) -> frozenset:
        names = self.variables
        return frozenset(
            (tuple((names[i], e) for i, e in enumerate(monom) if e), coeff)
            for monom, coeff in self.terms.items()
        )

    # -- arithmetic ---------------------------------------------------------

    def _unify(self, other: MultiPoly) -> tuple[PolyElement, PolyElement]:
        left, right = self._element, other._element
        if left.ring == right.ring:
            return left, right
        mine = self.variables
        names = mine + tuple(name for name in other.variables if name not in mine)
        ring = _ring(names)
        return left.set_ring(ring), right.set_ring(ring)

    def __add__(self, other: Any) -> MultiPoly:
        try:
            other = MultiPoly.coerce(other)
        except TypeError:
            return NotImplemented
        left, right = self._unify(other)
        return MultiPoly(left + right)

    __radd__ = __add__

    def __sub__(self, other: Any) -> MultiPoly:
        try:
            other = MultiPoly.coerce(other)
        except TypeError:
            return NotImplemented
        left, right = self._unify(other)
        return MultiPoly(left - right)

    def __rsub__(self, other: Any) -> MultiPoly:
        try:
            other = MultiPoly.coerce(other)
        except TypeError:
            return NotImplemented
        return other - self

    def __mul__(self, other: Any) -> MultiPoly:
        try:
            other = MultiPoly.coerce(other)
        except TypeError:
            return NotImplemented
        left, right = self._unify(other)
        return MultiPoly(left * right)

    __rmul__ = __mul__

    def __neg__(self) -> MultiPoly:
        return MultiPoly(-self._element)

    def __pos__(self) -> MultiPoly:
        return self

    def __pow__(self, exponent: int) -> MultiPoly:
        if isinstance(exponent, bool) or not isinstance(exponent, int):
            raise PolyDomainError(f"polynomial exponent must be an int, got {exponent!r}")
        if exponent < 0:
            raise PolyDomainError(f"negative polynomial exponent {exponent}")
        return MultiPoly(self._element**exponent)

    def __truediv__(self, other: Any) -> MultiPoly:
        """Division by a nonzero rational scalar only."""
        value = to_rational(other)
        if not value:
            raise PolyDomainError("division by zero")
        return self * (1 / value)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, MultiPoly):
            try:
                other = MultiPoly.coerce(other)
            except TypeError:
                return NotImplemented
        return (self - other).is_zero()

    def __hash__(self) -> int:
        return hash(self._canonical_terms())

    def __bool__(self) -> bool:
        return not self.is_zero()

    def __repr__(self) -> str:
        return f"MultiPoly({self})"

    def __str__(self) -> str:
        return str(self._element)

    # -- substitution and division -------------------------------------------

    def substitute(self, bindings: Mapping[str, Any]) -> MultiPoly:
        """Simultaneously replace variables by rationals or polynomials.

        Names that do not belong to this polynomial's variables are ignored, so
        one binding map can be applied to several polynomials.
        """
        names = self.variables
        values = {name: MultiPoly.coerce(value) for name, value in bindings.items() if name in names}
        if not values:
            return self
        extra = []
        for value in values.values():
            extra.extend(name for name in value.variables if name not in names and name not in extra)
        full = names + tuple(extra)
        ring = _ring(full)
        element = self._element.set_ring(ring)
        replacements = [(ring.gens[full.index(name)], value._element.set_ring(ring)) for name, value in values.items()]
        composed = element.compose(replacements)
        still_used = {name for value in values.values() for name in value.variables}
        keep = tuple(name for name in full if name not in values or name in still_used)
        return MultiPoly(composed.set_ring(_ring(keep)))

    def evaluate(self, bindings: Mapping[str, Any]) -> Fraction:
        """Substitute rationals for every occurring variable and return the value."""
        names = self.variables
        values = {}
        for i, name in enumerate(names):
            if name in bindings:
                values[i] = to_rational(bindings[name])
        total = Fraction(0)
        for monom, coeff in self._element.items():
            term = _from_ground(coeff)
            for i, e in enumerate(monom):
                if not e:
                    continue
                if i not in values:
                    raise PolyDomainError(f"variable {names[i]!r} is unbound in {self}")
                term *= values[i] ** e
            total += term
        return total

    def divmod(self, divisor: MultiPoly) -> tuple[MultiPoly, MultiPoly]:
        """Multivariate division by a single divisor (lex order on the union ring)."""
        divisor = MultiPoly.coerce(divisor)
        if divisor.is_zero():
            raise PolyDomainError("polynomial division by zero")
        left, right = self._unify(divisor)
        quotient, remainder = left.div(right)
        return MultiPoly(quotient), MultiPoly(remainder)

    def divides(self, other: MultiPoly) -> bool:
        return MultiPoly.coerce(other).divmod(self)[1].is_zero()

    def rational_roots(self, name: str) -> list[Fraction]:
        """Distinct rational roots of a polynomial that only involves ``name``."""
        others = [var for var in self.occurring() if var != name]
        if others:
            raise PolyDomainError(f"{self} is not univariate in {name!r}; also involves {others}")
        if self.is_zero():
            raise PolyDomainError("the zero polynomial has every value as a root")
        if self.degree(name) < 1:
            return []
        univariate = self.coefficients(name)
        rep = {(power,): _to_ground(coeff.constant_value()) for power, coeff in enumerate(univariate) if coeff}
        poly = sympy.Poly.from_dict(rep, sympy.Symbol(name), domain=QQ)
        roots = poly.ground_roots()
        return sorted(Fraction(int(root.p), int(root.q)) for root in roots)

    def to_sympy(self) -> sympy.Expr:
        return self._element.as_expr()


def poly_arith(op: str, p: MultiPoly, q: Any = None) -> MultiPoly:
    """Dispatch ``add``, ``sub``, ``mul``, ``neg`` or ``pow``."""
    if op == "add":
        return p + q
    if op == "sub":
        return p - q
    if op == "mul":
        return p * q
    if op == "neg":
        return -p
    if op == "pow":
        return p**q
    raise PolyDomainError(f"unknown polynomial operation {op!r}")


def poly_substitute(p: MultiPoly, bindings: Mapping[str, Any]) -> MultiPoly:
    return p.substitute(bindings)


def poly_is_zero(p: MultiPoly) -> bool:
    return p.is_zero()


def poly_divmod(p: MultiPoly, q: MultiPoly) -> tuple[MultiPoly, MultiPoly]:
    return p.divmod(q)


def poly_rational_roots(p: MultiPoly, symbol: str) -> list[Fraction]:
    return p.rational_roots(symbol)


def power_sum(values: Iterable[Any], k: int) -> Any:
    """Sum of k-th powers; works for Fractions and MultiPolys alike."""
    return reduce(lambda acc, v: acc + v**k, values, 0)


# ---------------------------------------------------------------------------
# Power-sum pairs
# ---------------------------------------------------------------------------


class DegreeClass(enum.Enum):
    EVEN = "even"
    ODD = "odd"
    MIXED = "mixed"


def classify_degrees(degrees: Iterable[int]) -> DegreeClass:
    parities = {k % 2 for k in degrees}
    if parities == {0}:
        return DegreeClass.EVEN
    if parities == {1}:
        return DegreeClass.ODD
    return DegreeClass.MIXED


def _check_degrees(degrees: Iterable[int]) -> frozenset[int]:
    result = frozenset(int(k) for k in degrees)
    if not result:
        raise ValueError("degrees must be a nonempty set")
    if any(k < 1 for k in result):
        raise ValueError(f"degrees must be positive integers, got {sorted(result)}")
    return result


@dataclass(frozen=True)
class PowerSumPair:
    """Two lists of rationals with equal k-th power sums for every k in ``degrees``.

    Validity is checked by :func:`verify_pair`, never assumed on construction.
    """

    lhs: tuple[Fraction, ...]
    rhs: tuple[Fraction, ...]
    degrees: frozenset[int]
    source: str = field(default="", compare=False)

    def __post_init__(self):
        object.__setattr__(self, "lhs", tuple(to_rational(v) for v in self.lhs))
        object.__setattr__(self, "rhs", tuple(to_rational(v) for v in self.rhs))
        object.__setattr__(self, "degrees", _check_degrees(self.degrees))

    @property
    def degree_class(self) -> DegreeClass:
        return classify_degrees(self.degrees)

    @property
    def is_trivial(self) -> bool:
        """Both sides are the same multiset once signs are normalized as in :func:`canonicalize`."""
        canonical = canonicalize(self)
        return canonical.lhs == canonical.rhs

    def residual(self, k: int) -> Fraction:
        return power_sum_residual(self, k)

    def is_valid(self) -> bool:
        return verify_pair(self).passed

    def with_degrees(self, degrees: Iterable[int]) -> PowerSumPair:
        return PowerSumPair(self.lhs, self.rhs, frozenset(degrees), self.source)

    def with_source(self, source: str) -> PowerSumPair:
        return PowerSumPair(self.lhs, self.rhs, self.degrees, source)

    def integers(self) -> tuple[tuple[int, ...], tuple[int, ...]]:
        """Both sides as int tuples; raises ValueError on a fractional entry."""
        if any(v.denominator != 1 for v in self.lhs + self.rhs):
            raise ValueError("pair has fractional entries; clear denominators first")
        return tuple(int(v) for v in self.lhs), tuple(int(v) for v in self.rhs)

    def __str__(self) -> str:
        left = ", ".join(str(v) for v in self.lhs)
        right = ", ".join(str(v) for v in self.rhs)
        return f"({left} | {right}) @ k in {sorted(self.degrees)}"


def power_sum_residual(pair: PowerSumPair, k: int) -> Fraction:
    """Sum of lhs**k minus sum of rhs**k, exactly."""
    if k < 1:
        raise ValueError(f"k must be a positive integer, got {k}")
    return Fraction(power_sum(pair.lhs, k) - power_sum(pair.rhs, k))


@dataclass(frozen=True)
class VerificationReport:
    pair: PowerSumPair
    residuals: dict[int, Fraction]

    @property
    def passed(self) -> bool:
        return all(value == 0 for value in self.residuals.values())

    @property
    def failing(self) -> list[int]:
        return [k for k, value in self.residuals.items() if value != 0]


def verify_pair(pair: PowerSumPair, degrees: Iterable[int] | None = None) -> VerificationReport:
    """Residual at every degree of the pair (or at ``degrees`` when given)."""
    ks = sorted(_check_degrees(pair.degrees if degrees is None else degrees))
    return VerificationReport(pair, {k: power_sum_residual(pair, k) for k in ks})


def clear_denominators(pair: PowerSumPair) -> PowerSumPair:
    """Scale both sides by the lcm of all denominators."""
    scale = 1
    for value in pair.lhs + pair.rhs:
        scale = lcm(scale, value.denominator)
    if scale == 1:
        return pair
    return PowerSumPair(
        tuple(v * scale for v in pair.lhs),
        tuple(v * scale for v in pair.rhs),
        pair.degrees,
        pair.source,
    )


def _descending(values: list[int]) -> list[int]:
    return sorted(values, reverse=True)


def canonicalize(pair: PowerSumPair) -> PowerSumPair:
    """Deterministic integer normal form used for comparison and dedup.

    Denominators are cleared, zeros dropped and the collective gcd divided out.
    Then signs are normalized by degree class: absolute values when every
    degree is even, negatives moved across when every degree is odd, and a
    global sign flip (making the entry of largest magnitude positive, positive
    winning ties) when mixed. Sides are sorted descending and the
    lexicographically larger side is placed on the left.
    """
    cleared = clear_denominators(pair)
    left = [int(v) for v in cleared.lhs if v]
    right = [int(v) for v in cleared.rhs if v]
    common = reduce(gcd, left + right, 0)
    if common > 1:
        left = [v // common for v in left]
        right = [v // common for v in right]

    degree_class = pair.degree_class
    if degree_class is DegreeClass.EVEN:
        left = [abs(v) for v in left]
        right = [abs(v) for v in right]
    elif degree_class is DegreeClass.ODD:
        left, right = (
            [v for v in left if v > 0] + [-v for v in right if v < 0],
            [v for v in right if v > 0] + [-v for v in left if v < 0],
        )
    elif left or right:
        peak = max(left + right, key=lambda v: (abs(v), v > 0))
        if peak < 0:
            left = [-v for v in left]
            right = [-v for v in right]

    left, right = _descending(left), _descending(right)
    if left < right:
        left, right = right, left
    return PowerSumPair(tuple(left), tuple(right), pair.degrees, pair.source)


# ---------------------------------------------------------------------------
# Symbolic pairs
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class PolyPair:
    """Symbolic analogue of :class:`PowerSumPair`; sides are polynomials."""

    lhs: tuple[MultiPoly, ...]
    rhs: tuple[MultiPoly, ...]
    degrees: frozenset[int]
    source: str = field(default="", compare=False)

    def __post_init__(self):
        object.__setattr__(self, "lhs", tuple(MultiPoly.coerce(p) for p in self.lhs))
        object.__setattr__(self, "rhs", tuple(MultiPoly.coerce(p) for p in self.rhs))
        object.__setattr__(self, "degrees", _check_degrees(self.degrees))

    def residual(self, k: int) -> MultiPoly:
        if k < 1:
            raise ValueError(f"k must be a positive integer, got {k}")
        return MultiPoly.coerce(power_sum(self.lhs, k)) - MultiPoly.coerce(power_sum(self.rhs, k))

    def identity_degrees(self, degrees: Iterable[int] | None = None) -> dict[int, bool]:
        """For each k, whether the residual expands to the zero polynomial."""
        ks = sorted(self.degrees if degrees is None else degrees)
        return {k: self.residual(k).is_zero() for k in ks}

    def is_identity(self) -> bool:
        return all(self.identity_degrees().values())

    def substitute(self, bindings: Mapping[str, Any]) -> PolyPair:
        return PolyPair(
            tuple(p.substitute(bindings) for p in self.lhs),
            tuple(p.substitute(bindings) for p in self.rhs),
            self.degrees,
            self.source,
        )

    def evaluate(self, bindings: Mapping[str, Any], source: str | None = None) -> PowerSumPair:
        return PowerSumPair(
            tuple(p.evaluate(bindings) for p in self.lhs),
            tuple(p.evaluate(bindings) for p in self.rhs),
            self.degrees,
            self.source if source is None else source,
        )

    def variables(self) -> tuple[str, ...]:
        seen: list[str] = []
        for p in self.lhs + self.rhs:
            seen.extend(name for name in p.occurring() if name not in seen)
        return tuple(seen)
