"""Brute-force ground truth: bounded exhaustive search and integer-only verification.

The search enumerates every side multiset as a join of a lower half and an
upper half (sorted entries, lower half's largest <= upper half's smallest),
keys each side by its power sums and pairs up sides that share a key.
"""
from __future__ import annotations

import itertools
import logging
import math
from collections import defaultdict
from collections.abc import Sequence
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from powersum.config import DEFAULT_WORK_CEILING
from powersum.errors import SearchTooLargeError
from powersum.exactcore import DegreeClass, PowerSumPair, canonicalize, classify_degrees

logger = logging.getLogger(__name__)

NAIVE_MAX_HEIGHT = 10
_INT64_LIMIT = 2**62


@dataclass(frozen=True)
class SearchSpec:
    """Bounds for a search. ``signed`` defaults to False for all-even degrees.

    The work ceiling applied by :func:`search` counts side multisets and then
    candidate pairs that share every power-sum key. It does not count 3-subsets
    of values, so a single low degree at a large height can be refused even when
    the multiset count is small: ``search({2}, 36)`` has C(41, 6) sides but
    about 2.8e9 candidates.
    """

    degrees: frozenset[int]
    height: int
    side_len: int = 6
    signed: Optional[bool] = field(default=None)

    def __post_init__(self):
        degrees = frozenset(int(k) for k in self.degrees)
        if not degrees or min(degrees) < 1:
            raise ValueError(f"degrees must be positive integers, got {sorted(degrees)}")
        if self.height < 1:
            raise ValueError(f"height must be >= 1, got {self.height}")
        if self.side_len < 1:
            raise ValueError(f"side_len must be >= 1, got {self.side_len}")
        object.__setattr__(self, "degrees", degrees)
        if self.signed is None:
            object.__setattr__(self, "signed", classify_degrees(degrees) is not DegreeClass.EVEN)

    def values(self) -> list[int]:
        if self.signed:
            return [v for v in range(-self.height, self.height + 1) if v]
        return list(range(1, self.height + 1))


def estimate_work(spec: SearchSpec) -> int:
    """Number of side multisets the join enumerates."""
    n = len(spec.values())
    return math.comb(n + spec.side_len - 1, spec.side_len)


# ---------------------------------------------------------------------------
# Meet-in-the-middle join
# ---------------------------------------------------------------------------


def _halves(side_len: int) -> tuple[int, int]:
    lower = side_len - side_len // 2
    return lower, side_len - lower


def _table(n_values: int, size: int) -> np.ndarray:
    rows = list(itertools.combinations_with_replacement(range(n_values), size))
    return np.array(rows, dtype=np.int64).reshape(len(rows), size)


def _needs_exact(values: Sequence[int], degrees: frozenset[int], side_len: int) -> bool:
    top = max(abs(v) for v in values)
    return side_len * top ** max(degrees) >= _INT64_LIMIT


def _power_sums(values: np.ndarray, table: np.ndarray, k: int) -> np.ndarray:
    if table.shape[1] == 0:
        return np.zeros(table.shape[0], dtype=values.dtype)
    return (values[table] ** k).sum(axis=1)


def _join_partition(
    values: tuple[int, ...], degrees: tuple[int, ...], side_len: int, leads: tuple[int, ...]
) -> tuple[list[np.ndarray], np.ndarray, np.ndarray]:
    """Joined side keys for lower halves whose smallest entry index is in ``leads``."""
    exact = _needs_exact(values, frozenset(degrees), side_len)
    value_arr = np.array(values, dtype=object if exact else np.int64)
    lower_size, upper_size = _halves(side_len)
    lower, upper = _table(len(values), lower_size), _table(len(values), upper_size)
    lower_sums = [_power_sums(value_arr, lower, k) for k in degrees]
    upper_sums = [_power_sums(value_arr, upper, k) for k in degrees]
    upper_min = upper[:, 0] if upper_size else np.full(upper.shape[0], len(values), dtype=np.int64)

    wanted = set(leads)
    keys: list[list[np.ndarray]] = [[] for _ in degrees]
    firsts: list[np.ndarray] = []
    seconds: list[np.ndarray] = []
    for i, row in enumerate(lower):
        if int(row[0]) not in wanted:
            continue
        start = int(np.searchsorted(upper_min, row[-1], side="left")) if upper_size else 0
        seconds.append(np.arange(start, upper.shape[0], dtype=np.int64))
        firsts.append(np.full(upper.shape[0] - start, i, dtype=np.int64))
        for d in range(len(degrees)):
            keys[d].append(lower_sums[d][i] + upper_sums[d][start:])
    if not firsts:
        empty = np.zeros(0, dtype=np.int64)
        return [np.zeros(0, dtype=value_arr.dtype) for _ in degrees], empty, empty
    return [np.concatenate(parts) for parts in keys], np.concatenate(firsts), np.concatenate(seconds)


def _partitions(n_values: int, workers: int) -> list[tuple[int, ...]]:
    # strided so that the heavy small leading entries spread across workers
    return [tuple(range(w, n_values, workers)) for w in range(min(workers, n_values))]


def _group_runs(keys: list[np.ndarray]) -> list[np.ndarray]:
    """Index groups (size >= 2) of rows that agree on every key."""
    if not len(keys[0]):
        return []
    if all(k.dtype != object for k in keys):
        order = np.lexsort(keys[::-1])
        changed = np.zeros(len(order) - 1, dtype=bool)
        for k in keys:
            ordered = k[order]
            changed |= ordered[1:] != ordered[:-1]
        bounds = np.concatenate(([0], np.flatnonzero(changed) + 1, [len(order)]))
        return [order[a:b] for a, b in zip(bounds[:-1], bounds[1:], strict=True) if b - a > 1]
    groups: dict[tuple[int, ...], list[int]] = defaultdict(list)
    for i, key in enumerate(zip(*(k.tolist() for k in keys), strict=True)):
        groups[key].append(i)
    return [np.array(g, dtype=np.int64) for g in groups.values() if len(g) > 1]


def _collect(spec: SearchSpec, sides: list[tuple[int, ...]]) -> dict[tuple, PowerSumPair]:
    found: dict[tuple, PowerSumPair] = {}
    for a, b in itertools.combinations(sides, 2):
        pair = canonicalize(PowerSumPair(a, b, spec.degrees))
        if pair.is_trivial:
            continue
        key = pair.integers()
        if key not in found:
            found[key] = pair.with_source(f"search degrees={sorted(spec.degrees)} height={spec.height}")
    return found


def search(
    spec: SearchSpec,
    workers: int = 1,
    work_ceiling: int = DEFAULT_WORK_CEILING,
) -> list[PowerSumPair]:
    """All canonically distinct nontrivial pairs within the bounds, sorted.

    Raises SearchTooLargeError if the number of side multisets exceeds
    ``work_ceiling`` (checked before any work), or if the number of candidate
    pairs sharing a key does (checked after the join). Neither count is a count
    of 3-subsets, see :class:`SearchSpec`. Output does not depend on ``workers``.
    """
    estimate = estimate_work(spec)
    if estimate > work_ceiling:
        raise SearchTooLargeError(estimate, work_ceiling)
    values = tuple(spec.values())
    degrees = tuple(sorted(spec.degrees))
    partitions = _partitions(len(values), max(1, workers))
    logger.debug("search %s: %d side multisets over %d partitions", spec, estimate, len(partitions))

    if len(partitions) == 1:
        results = [_join_partition(values, degrees, spec.side_len, partitions[0])]
    else:
        with ProcessPoolExecutor(max_workers=len(partitions)) as pool:
            results = list(
                pool.map(
                    _join_partition,
                    itertools.repeat(values),
                    itertools.repeat(degrees),
                    itertools.repeat(spec.side_len),
                    partitions,
                )
            )
    keys = [np.concatenate([r[0][d] for r in results]) for d in range(len(degrees))]
    firsts = np.concatenate([r[1] for r in results])
    seconds = np.concatenate([r[2] for r in results])

    groups = _group_runs(keys)
    candidates = sum(len(g) * (len(g) - 1) // 2 for g in groups)
    if candidates > work_ceiling:
        raise SearchTooLargeError(candidates, work_ceiling)

    lower_size, upper_size = _halves(spec.side_len)
    lower, upper = _table(len(values), lower_size), _table(len(values), upper_size)
    found: dict[tuple, PowerSumPair] = {}
    for group in groups:
        sides = [
            tuple(values[j] for j in itertools.chain(lower[firsts[i]], upper[seconds[i]]))
            for i in group
        ]
        for key, pair in _collect(spec, sides).items():
            found.setdefault(key, pair)
    pairs = [found[key] for key in sorted(found)]
    logger.info(
        "search %s: %d key groups, %d candidates, %d canonical pairs", spec, len(groups), candidates, len(pairs)
    )
    return pairs


def naive_search(spec: SearchSpec) -> list[PowerSumPair]:
    """Reference enumerator: every side multiset directly, grouped by power sums."""
    if spec.height > NAIVE_MAX_HEIGHT:
        raise ValueError(f"naive_search is limited to height <= {NAIVE_MAX_HEIGHT}, got {spec.height}")
    by_key: dict[tuple[int, ...], list[tuple[int, ...]]] = defaultdict(list)
    for side in itertools.combinations_with_replacement(spec.values(), spec.side_len):
        by_key[tuple(sum(v**k for v in side) for k in sorted(spec.degrees))].append(side)
    found: dict[tuple, PowerSumPair] = {}
    for sides in by_key.values():
        for key, pair in _collect(spec, sides).items():
            found.setdefault(key, pair)
    return [found[key] for key in sorted(found)]


# ---------------------------------------------------------------------------
# Verification
# ---------------------------------------------------------------------------


def oracle_verify(pair: PowerSumPair) -> bool:
    """Direct summation per degree on integers; rational entries are scaled first."""
    scale = math.lcm(*(v.denominator for v in (*pair.lhs, *pair.rhs)))
    lhs = [v.numerator * (scale // v.denominator) for v in pair.lhs]
    rhs = [v.numerator * (scale // v.denominator) for v in pair.rhs]
    return all(sum(v**k for v in lhs) == sum(v**k for v in rhs) for k in pair.degrees)
