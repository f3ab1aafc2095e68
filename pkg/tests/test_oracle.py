"""Bounded exhaustive search and integer-only verification."""
import math
from fractions import Fraction

import numpy as np
import pytest

from powersum.config import DEFAULT_WORK_CEILING
from powersum.errors import SearchTooLargeError
from powersum.exactcore import PowerSumPair, verify_pair
from powersum.families import shift_extend
from powersum.oracle import SearchSpec, estimate_work, naive_search, oracle_verify, search
from powersum.tables import TABLE_A

CUBES_10 = SearchSpec(frozenset({3}), 10, signed=False)
CUBES_12 = SearchSpec(frozenset({3}), 12, signed=False)


def _integers(pairs):
    return [pair.integers() for pair in pairs]


@pytest.mark.oracle
class TestSearchSpec:
    def test_signed_default_follows_degree_class(self):
        assert SearchSpec(frozenset({3}), 4).signed is True
        assert SearchSpec(frozenset({2, 4}), 4).signed is False
        assert SearchSpec(frozenset({1, 2}), 4).signed is True

    def test_values(self):
        assert SearchSpec(frozenset({3}), 2).values() == [-2, -1, 1, 2]
        assert CUBES_10.values() == list(range(1, 11))

    @pytest.mark.parametrize(
        "degrees,height,side_len",
        [(frozenset(), 5, 6), (frozenset({0}), 5, 6), (frozenset({3}), 0, 6), (frozenset({3}), 5, 0)],
    )
    def test_invalid_bounds(self, degrees, height, side_len):
        with pytest.raises(ValueError):
            SearchSpec(degrees, height, side_len)

    def test_estimate(self):
        assert estimate_work(CUBES_10) == 5005
        assert estimate_work(CUBES_12) == 12376


@pytest.mark.oracle
class TestSearch:
    """Meet-in-the-middle search against the direct enumerator."""

    def test_matches_naive(self):
        fast = search(CUBES_10)
        assert fast, "expected equal sums of six cubes up to 10"
        assert _integers(fast) == _integers(naive_search(CUBES_10))

    def test_finds_known_cube_pair(self):
        found = _integers(search(CUBES_12))
        assert ((12, 9, 8, 4, 2, 1), (11, 10, 7, 6, 5, 3)) in found

    def test_results_are_canonical_and_valid(self):
        for pair in search(CUBES_10):
            assert oracle_verify(pair), f"{pair} fails verification"
            assert not pair.is_trivial
            assert list(pair.lhs) == sorted(pair.lhs, reverse=True)

    def test_workers_do_not_change_output(self):
        assert _integers(search(CUBES_10, workers=2)) == _integers(search(CUBES_10, workers=1))

    def test_small_signed_ninth_powers_empty(self):
        assert search(SearchSpec(frozenset({9}), 1)) == []

    def test_short_sides(self):
        squares = search(SearchSpec(frozenset({2}), 7, side_len=2))
        assert ((7, 1), (5, 5)) in _integers(squares)

    def test_ceiling_on_multisets(self):
        with pytest.raises(SearchTooLargeError) as info:
            search(CUBES_10, work_ceiling=100)
        assert info.value.estimate == 5005
        assert info.value.ceiling == 100

    def test_ceiling_on_candidates(self):
        with pytest.raises(SearchTooLargeError) as info:
            search(CUBES_12, work_ceiling=13000)
        assert info.value.estimate > 13000

    def test_naive_height_limit(self):
        with pytest.raises(ValueError):
            naive_search(SearchSpec(frozenset({3}), 11, signed=False))

    @pytest.mark.slow
    def test_degree_two_alone_refused_on_candidates(self):
        spec = SearchSpec(frozenset({2}), 36)
        assert estimate_work(spec) == math.comb(41, 6) < DEFAULT_WORK_CEILING
        with pytest.raises(SearchTooLargeError) as info:
            search(spec)
        assert info.value.estimate == 2789079088
        assert info.value.ceiling == DEFAULT_WORK_CEILING

    @pytest.mark.slow
    def test_even_multigrade(self):
        found = _integers(search(SearchSpec(frozenset({2, 4, 6}), 36), work_ceiling=10**7))
        assert ((36, 31, 30, 17, 7, 1), (35, 34, 27, 19, 4, 3)) in found

    def test_shift_extend_on_searched_seeds(self):
        seeds = search(SearchSpec(frozenset({2}), 9, side_len=3))[:20]
        assert len(seeds) == 20
        rng = np.random.default_rng(7)
        for seed, numerator in zip(seeds, rng.integers(-12, 13, size=20), strict=True):
            t = Fraction(int(numerator), 3)
            extended = shift_extend(seed, t)
            assert extended.degrees == frozenset({1, 2, 3})
            assert oracle_verify(extended), f"{seed} shifted by {t} fails"
        for seed, shift in zip(seeds, rng.integers(-10, 11, size=20), strict=True):
            extended = shift_extend(seed, int(shift))
            assert verify_pair(extended).passed
            assert oracle_verify(extended), f"{seed} shifted by {shift} fails"


@pytest.mark.oracle
class TestOracleVerify:
    def test_integer_pair(self):
        assert oracle_verify(PowerSumPair((1, 5, 6), (2, 3, 7), {1, 2}))
        assert not oracle_verify(PowerSumPair((1, 5, 6), (2, 3, 7), {3}))

    def test_rational_entries_scaled(self):
        half = Fraction(1, 2)
        pair = PowerSumPair((half, 5 * half, 3), (1, 3 * half, 7 * half), {1, 2})
        assert oracle_verify(pair)

    @pytest.mark.parametrize("row", TABLE_A, ids=lambda row: f"n={row.n}")
    def test_table_rows(self, row):
        assert oracle_verify(row.pair())

    def test_agrees_with_exact_verification(self):
        rng = np.random.default_rng(1729)
        entries = rng.integers(-20, 21, size=(1000, 2, 3))
        scales = rng.integers(1, 6, size=1000)
        degrees = rng.integers(1, 4, size=1000)
        for row, scale, k in zip(entries, scales, degrees, strict=True):
            pair = PowerSumPair(
                tuple(Fraction(int(v), int(scale)) for v in row[0]),
                tuple(Fraction(int(v), int(scale)) for v in row[1]),
                {int(k)},
            )
            assert oracle_verify(pair) == verify_pair(pair).passed, f"verifiers disagree on {pair}"
