"""Reproduce every printed worked example and compare canonical forms."""
from __future__ import annotations

import logging
from collections.abc import Callable, Iterable
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from powersum.errors import PowersumError
from powersum.exactcore import PowerSumPair, canonicalize
from powersum.families import (
    DEG3_SHIFT_BASE,
    DEG3_SYMMETRIC_BASE,
    DEG6_EXAMPLE_C,
    deg2_family,
    deg3_shift_family,
    deg3_symmetric_family,
    deg4_family,
    deg5_66_family,
    deg6_family,
    deg7_family,
    deg8_family,
    deg9_family,
)
from powersum.oracle import oracle_verify
from powersum.tables import ERRATA, TABLE_A, Erratum

logger = logging.getLogger(__name__)

DEG9_2P_T = Fraction(3181201, 12876603)


@dataclass(frozen=True)
class WorkedExample:
    key: str
    lhs: tuple[int, ...]
    rhs: tuple[int, ...]
    degrees: frozenset[int]
    compute: Optional[Callable[[], PowerSumPair]] = None

    def printed(self) -> PowerSumPair:
        return PowerSumPair(self.lhs, self.rhs, self.degrees, f"printed {self.key}")


@dataclass(frozen=True)
class AuditRecord:
    key: str
    printed: PowerSumPair
    computed: Optional[PowerSumPair]
    passed: bool
    matches: Optional[bool]
    error: Optional[str] = None

    @property
    def ok(self) -> bool:
        return self.passed and self.matches is not False and self.error is None


def _ex(key, lhs, rhs, degrees, compute=None) -> WorkedExample:
    return WorkedExample(key, tuple(lhs), tuple(rhs), frozenset(degrees), compute)


WORKED_EXAMPLES = (
    _ex("deg2 k=2", (85, 158, 243, 252, 49, 119), (21, 28, 133, 189, 238, 245), {2}, lambda: deg2_family(2)),
    _ex(
        "deg3-shift x=-1/5",
        (-4, -3, -1, 3, 4, 7),
        (-2, 0, 1, 2, 5, 6),
        {3},
        lambda: deg3_shift_family(*DEG3_SHIFT_BASE).pair,
    ),
    _ex(
        "deg3-sym x=1",
        (3, 4, 5, 11, 22, 21),
        (1, 6, 9, 20, 7, 23),
        {3},
        lambda: deg3_symmetric_family(*DEG3_SYMMETRIC_BASE, 1),
    ),
    _ex(
        "deg4 k=2",
        (1944, 1264, 680, 1862, 2793, 4655),
        (1197, 3325, 1176, 4522, 784, 1960),
        {4},
        lambda: deg4_family(2),
    ),
    _ex(
        "deg5 m=2",
        (1113, 377, 889, 303, 567, 119),
        (269, 417, 989, 203, 427, 1063),
        {5},
        lambda: deg5_66_family(2),
    ),
    _ex("deg6 a)", (3, 109, 67, 7, 61, 79), (53, 59, 17, 21, 89, 107), {6}, lambda: deg6_family(1, 1, 1)),
    _ex("deg6 b)", (59, 245, 131, 167, 13, 159), (93, 211, 97, 91, 89, 235), {6}, lambda: deg6_family(1, 1, 3)),
    _ex("deg6 c)", *DEG6_EXAMPLE_C, {6}),
    _ex(
        "deg7 (p,q,a,b)=(3,2,1,13)",
        (-13, 33, -59, 23, -5, -51),
        (39, -19, -55, 19, -57, 1),
        {1, 3, 5, 7},
        lambda: deg7_family(3, 2, 1, 13),
    ),
    _ex(
        "deg7 (p,q,a,b)=(3,2,466,607)",
        (329, -39, -4347, 1159, -1923, -1555),
        (2757, -2467, -2483, -705, -4351, 873),
        {1, 3, 5, 7},
        lambda: deg7_family(3, 2, 466, 607),
    ),
    _ex(
        "deg7 (p,q,a,b)=(3,2,607,466)",
        (372, -517, -2248, 364, -1314, -425),
        (1304, -1449, -1034, -850, -2246, 507),
        {1, 3, 5, 7},
        lambda: deg7_family(3, 2, 607, 466),
    ),
    _ex(
        "deg7 (p,q,a,b)=(4,1,89,82)",
        (255, 457, 573, 83, 95, 753),
        (419, 293, 751, 589, 41, 123),
        {1, 3, 5, 7},
        lambda: deg7_family(4, 1, 89, 82),
    ),
    _ex(
        "deg7 (p,q,a,b)=(4,1,82,89)",
        (129, 199, 285, 71, 11, 366),
        (218, 110, 367, 277, 38, 51),
        {1, 3, 5, 7},
        lambda: deg7_family(4, 1, 82, 89),
    ),
    _ex(
        "deg8 (x,a,b)=(1,47,82)",
        (565, 459, 457, 552, 23, 116),
        (493, 575, 529, 436, 93, 72),
        {8},
        lambda: deg8_family(1, 47, 82),
    ),
    _ex(
        "deg8 (x,a,b)=(-6,21,113)",
        (211, 155, 59, 44, 165, 54),
        (31, 209, 121, 10, 111, 180),
        {8},
        lambda: deg8_family(-6, 21, 113),
    ),
    _ex(
        "deg8 (x,a,b)=(6,15,139)",
        (106, 203, 295, 91, 78, 216),
        (232, 13, 169, 125, 294, 126),
        {8},
        lambda: deg8_family(6, 15, 139),
    ),
    _ex(
        "deg8 (x,a,b)=(-14,5,9)",
        (19, 27, 35, 4, 3, 34),
        (17, 7, 1, 30, 31, 36),
        {8},
        lambda: deg8_family(-14, 5, 9),
    ),
    _ex(
        "deg8 (x,a,b)=(-14,3,-37)",
        (190, 111, 127, 13, 182, 84),
        (148, 195, 169, 71, 98, 42),
        {8},
        lambda: deg8_family(-14, 3, -37),
    ),
    _ex(
        "deg9 (a,b,t)=(3,4,27/41)",
        (1025, 291, -996, -1081, 965, -44),
        (865, 131, -1156, -921, 1125, 116),
        {1, 2, 3, 9},
        lambda: deg9_family(3, 4, Fraction(27, 41)),
    ),
    _ex(
        "deg9 (a,b,t)=(3,4,t of 2P)",
        (15677071397, 40208111671, -63297775068, -26458358421, 63560861593, -33396207172),
        (19383367397, 43914407671, -59591479068, -30164654421, 59854565593, -37102503172),
        {1, 2, 3, 9},
        lambda: deg9_family(3, 4, DEG9_2P_T),
    ),
    _ex(
        "deg9 (a,b,t)=(1,3,6/5)",
        (18, 13, 14, 23, 13, 1),
        (5, 10, 15, 21, 22, 9),
        {1, 3, 9},
        lambda: deg9_family(1, 3, Fraction(6, 5)),
    ),
    _ex(
        "deg9 (a,b,t)=(4,9,13/3)",
        (453, 122, 331, 431, 150, 281),
        (429, 98, 307, 455, 174, 305),
        {1, 3, 9},
        lambda: deg9_family(4, 9, Fraction(13, 3)),
    ),
)


def _same_canonical(printed: PowerSumPair, computed: PowerSumPair) -> bool:
    """Compare at the printed degrees, so odd-moved printed rows match signed results."""
    left = canonicalize(printed)
    right = canonicalize(computed.with_degrees(printed.degrees))
    return left.integers() == right.integers()


def audit_example(example: WorkedExample) -> AuditRecord:
    printed = example.printed()
    passed = oracle_verify(printed)
    if example.compute is None:
        return AuditRecord(example.key, printed, None, passed, None)
    try:
        computed = example.compute()
    except PowersumError as exc:
        logger.warning("audit %s: recomputation failed: %s", example.key, exc)
        return AuditRecord(example.key, printed, None, passed, False, str(exc))
    matches = _same_canonical(printed, computed)
    if not matches:
        logger.warning("audit %s: printed %s, computed %s", example.key, printed, computed)
    return AuditRecord(example.key, printed, computed, passed, matches)


def audit_examples(examples: Iterable[WorkedExample] = WORKED_EXAMPLES) -> list[AuditRecord]:
    records = [audit_example(example) for example in examples]
    logger.info("audit: %d of %d worked examples reproduced", sum(r.ok for r in records), len(records))
    return records


def audit_table() -> list[AuditRecord]:
    """Table A rows verified at their stated degrees (nothing to recompute)."""
    return [AuditRecord(f"table-a n={row.n}", row.pair(), None, oracle_verify(row.pair()), None) for row in TABLE_A]


def audit_errata(errata: Iterable[Erratum] = ERRATA) -> list[tuple[Erratum, bool]]:
    results = []
    for erratum in errata:
        holds = erratum.holds()
        if not holds:
            logger.warning("erratum %s: resolution no longer reproduces", erratum.key)
        results.append((erratum, holds))
    return results
