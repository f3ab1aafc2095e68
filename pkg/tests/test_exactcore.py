"""Exact scalars, polynomial algebra and power-sum pair verification."""
from fractions import Fraction

import numpy as np
import pytest

from powersum.errors import PolyDomainError
from powersum.exactcore import (
    DegreeClass,
    MultiPoly,
    PolyPair,
    PowerSumPair,
    canonicalize,
    classify_degrees,
    clear_denominators,
    parse_rational,
    poly_arith,
    poly_is_zero,
    poly_substitute,
    power_sum,
    power_sum_residual,
    rational_sqrt,
    to_rational,
    verify_pair,
)

CUBIC_ROW = ((11, 22, 4, 3, 21, 5), (20, 7, 6, 23, 9, 1))


@pytest.mark.exactcore
class TestScalars:
    """Rational parsing and square roots."""

    def test_parse_fraction(self):
        assert parse_rational("27/41") == Fraction(27, 41)
        assert parse_rational(" -3 ") == Fraction(-3)
        assert parse_rational("+5") == Fraction(5)

    @pytest.mark.parametrize("text", ["1.5", "abc", "1/0", "", "2/-3"])
    def test_parse_rejects(self, text):
        with pytest.raises(ValueError):
            parse_rational(text)

    def test_to_rational_rejects_bool_and_float(self):
        with pytest.raises(TypeError):
            to_rational(True)
        with pytest.raises(TypeError):
            to_rational(0.5)

    def test_rational_sqrt(self):
        assert rational_sqrt(Fraction(9, 4)) == Fraction(3, 2)
        assert rational_sqrt(0) == 0
        assert rational_sqrt(2) is None
        assert rational_sqrt(-4) is None
        assert rational_sqrt(Fraction(4, 3)) is None


@pytest.mark.exactcore
class TestMultiPoly:
    """Arithmetic, substitution, division and roots."""

    def test_binomial_expansion_is_exact(self):
        x, y = MultiPoly.symbols("x y")
        diff = (x + y) ** 2 - (x**2 + 2 * x * y + y**2)
        assert diff.is_zero(), f"expected zero, got {diff}"

    def test_cancellation_equals_constant_zero(self):
        x, y = MultiPoly.symbols("x y")
        assert x - x == 0
        assert (x - x).occurring() == ()
        assert hash(x - x) == hash(MultiPoly.constant(0))

    def test_mixed_rings_are_unified(self):
        (x,) = MultiPoly.symbols("x")
        (z,) = MultiPoly.symbols("z")
        p = x * z + 1
        assert set(p.occurring()) == {"x", "z"}
        assert p.evaluate({"x": 2, "z": 3}) == 7

    def test_degree_and_coefficients(self):
        x, y = MultiPoly.symbols("x y")
        p = 3 * x**2 * y + x * y + 5
        assert p.degree("x") == 2
        assert p.degree("y") == 1
        assert p.coefficient("x", 2) == 3 * y
        assert p.coefficients("x") == [MultiPoly.constant(5), y, 3 * y]
        assert MultiPoly.constant(0).degree("x") == -1

    def test_substitute_polynomial(self):
        x, y = MultiPoly.symbols("x y")
        assert (x + y).substitute({"y": x}) == 2 * x
        assert (x + y).substitute({"unused": 4}) == x + y

    def test_evaluate(self):
        x, y = MultiPoly.symbols("x y")
        assert (x**2 + y).evaluate({"x": 2, "y": Fraction(1, 2)}) == Fraction(9, 2)

    def test_evaluate_unbound_raises(self):
        x, y = MultiPoly.symbols("x y")
        with pytest.raises(PolyDomainError):
            (x + y).evaluate({"x": 1})

    def test_constant_value(self):
        (x,) = MultiPoly.symbols("x")
        assert (x - x + 7).constant_value() == 7
        with pytest.raises(PolyDomainError):
            (x + 1).constant_value()

    def test_divides(self):
        (x,) = MultiPoly.symbols("x")
        assert (x - 1).divides(x**2 - 1)
        assert not (x - 1).divides(x**2 + 1)
        quotient, remainder = (x**2 - 1).divmod(x + 1)
        assert quotient == x - 1
        assert remainder.is_zero()

    def test_division_errors(self):
        (x,) = MultiPoly.symbols("x")
        with pytest.raises(PolyDomainError):
            x / 0
        with pytest.raises(PolyDomainError):
            x.divmod(MultiPoly.constant(0))
        with pytest.raises(PolyDomainError):
            x**-1

    def test_rational_roots(self):
        (x,) = MultiPoly.symbols("x")
        assert (6 * x**2 - 5 * x + 1).rational_roots("x") == [Fraction(1, 3), Fraction(1, 2)]
        assert (x**2 - 2).rational_roots("x") == []

    def test_rational_roots_needs_univariate(self):
        x, y = MultiPoly.symbols("x y")
        with pytest.raises(PolyDomainError):
            (x + y).rational_roots("x")

    def test_poly_arith_dispatch(self):
        x, y = MultiPoly.symbols("x y")
        assert poly_arith("add", x, y) == x + y
        assert poly_arith("pow", x, 3) == x**3
        assert poly_arith("neg", x) == -x
        with pytest.raises(PolyDomainError):
            poly_arith("mod", x, y)


@pytest.mark.exactcore
class TestPowerSumPair:
    """Verification, classification and canonical form."""

    def test_power_sum(self):
        assert power_sum([1, 2, 3], 2) == 14

    def test_classify(self):
        assert classify_degrees({2, 4}) is DegreeClass.EVEN
        assert classify_degrees({1, 3, 9}) is DegreeClass.ODD
        assert classify_degrees({1, 2, 3, 9}) is DegreeClass.MIXED

    def test_bad_degrees(self):
        with pytest.raises(ValueError):
            PowerSumPair((1,), (1,), set())
        with pytest.raises(ValueError):
            PowerSumPair((1,), (1,), {0})

    def test_cubic_row_valid_at_one_two_three(self):
        pair = PowerSumPair(*CUBIC_ROW, {1, 2, 3})
        report = verify_pair(pair)
        assert report.passed, f"residuals: {report.residuals}"

    def test_residual_at_other_degree(self):
        report = verify_pair(PowerSumPair(*CUBIC_ROW, {3}), [3, 4])
        assert report.failing == [4]
        assert report.residuals[4] == -5760

    def test_trivial(self):
        assert PowerSumPair((1, 2), (2, 1), {1}).is_trivial
        assert not PowerSumPair(*CUBIC_ROW, {3}).is_trivial

    def test_trivial_respects_degree_class(self):
        assert PowerSumPair((-3, 4), (3, -4), {2}).is_trivial
        assert PowerSumPair((3, -3, 5), (1, -1, 5), {1, 3}).is_trivial
        assert not PowerSumPair((-3, 4), (3, -4), {1, 2}).is_trivial

    def test_clear_denominators(self):
        pair = clear_denominators(PowerSumPair((Fraction(1, 2), Fraction(1, 3)), (Fraction(1, 6),), {1}))
        assert pair.integers() == ((3, 2), (1,))

    def test_integers_rejects_fractions(self):
        with pytest.raises(ValueError):
            PowerSumPair((Fraction(1, 2),), (1,), {1}).integers()

    def test_canonical_even_takes_absolute_values(self):
        pair = canonicalize(PowerSumPair((-3, 4), (5, 0), {2}))
        assert pair.integers() == ((5,), (4, 3))

    def test_canonical_odd_moves_negatives(self):
        pair = canonicalize(PowerSumPair((-1, 3), (2,), {1}))
        assert pair.integers() == ((3,), (2, 1))

    def test_canonical_divides_gcd(self):
        pair = canonicalize(PowerSumPair((2, 4), (6,), {1}))
        assert pair.integers() == ((3,), (2, 1))

    def test_canonical_mixed_is_sign_invariant(self):
        pair = PowerSumPair((0, 3, 3), (1, 1, 4), {1, 2})
        negated = PowerSumPair((0, -3, -3), (-1, -1, -4), {1, 2})
        assert canonicalize(pair) == canonicalize(negated)
        assert canonicalize(pair).integers() == ((4, 1, 1), (3, 3))

    def test_canonical_is_idempotent(self):
        once = canonicalize(PowerSumPair(*CUBIC_ROW, {3}))
        assert canonicalize(once) == once


@pytest.mark.exactcore
class TestPolyPair:
    """Symbolic pairs."""

    def _pair(self):
        (x,) = MultiPoly.symbols("x")
        return PolyPair((x, x + 4, x + 5), (x + 1, x + 2, x + 6), {1, 2}, "pte")

    def test_identity_degrees(self):
        pair = self._pair()
        assert pair.is_identity()
        assert pair.identity_degrees([1, 2, 3]) == {1: True, 2: True, 3: False}

    def test_evaluate(self):
        pair = self._pair().evaluate({"x": 1})
        assert pair.integers() == ((1, 5, 6), (2, 3, 7))
        assert verify_pair(pair).passed

    def test_variables(self):
        assert self._pair().variables() == ("x",)


def _random_poly(rng) -> MultiPoly:
    terms = {}
    for _ in range(4):
        monom = tuple(int(e) for e in rng.integers(0, 3, size=3))
        terms[monom] = Fraction(int(rng.integers(-9, 10)), int(rng.integers(1, 5)))
    return MultiPoly.from_terms(("x", "y", "z"), terms)


@pytest.mark.exactcore
class TestAlgebraLaws:
    """Ring axioms and substitution on seeded random polynomials."""

    @pytest.mark.parametrize("seed", range(10))
    def test_ring_axioms(self, seed):
        rng = np.random.default_rng(seed)
        p, q, r = (_random_poly(rng) for _ in range(3))
        assert poly_arith("add", p, q) == poly_arith("add", q, p)
        assert poly_arith("mul", p, q) == poly_arith("mul", q, p)
        assert (p + q) + r == p + (q + r)
        assert (p * q) * r == p * (q * r)
        assert p * (q + r) == p * q + p * r
        assert poly_is_zero(poly_arith("add", p, poly_arith("neg", p)))
        assert poly_arith("pow", p, 2) == p * p

    @pytest.mark.parametrize("seed", range(10))
    def test_substitute_agrees_with_evaluate(self, seed):
        rng = np.random.default_rng(100 + seed)
        p = _random_poly(rng)
        values = [Fraction(int(rng.integers(-7, 8)), int(rng.integers(1, 4))) for _ in range(3)]
        bindings = dict(zip(("x", "y", "z"), values, strict=True))
        expected = p.evaluate(bindings)
        assert poly_substitute(p, bindings).constant_value() == expected
        partial = poly_substitute(p, {"x": bindings["x"]})
        assert partial.evaluate(bindings) == expected


@pytest.mark.exactcore
class TestCanonicalPerDegreeClass:
    """canonicalize keeps every degree's pass/fail status."""

    @pytest.mark.parametrize(
        "pair",
        [
            PowerSumPair((-1, 7, -17, 30, 31, 36), (3, 4, 19, 27, 34, -35), {2, 4, 10}),
            PowerSumPair(
                tuple(Fraction(v, 3) for v in (11, 22, 4, 3, 21, -1)),
                tuple(Fraction(v, 3) for v in (20, 7, 6, 23, 9, -5)),
                {1, 3, 5},
            ),
            PowerSumPair((-1, -13, -14, -13, -18, -23), (-5, -9, -10, -15, -21, -22), {1, 2, 3, 9}),
        ],
        ids=["even", "odd", "mixed"],
    )
    def test_residual_status_preserved(self, pair):
        canonical = canonicalize(pair)
        for k in sorted(pair.degrees):
            before = power_sum_residual(pair, k) == 0
            after = power_sum_residual(canonical, k) == 0
            assert before == after, f"k={k}: {before} before, {after} after"
        assert not verify_pair(pair).passed, "each fixture includes one failing degree"
