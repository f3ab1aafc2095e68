"""pandas views of pairs, audits and curve points for the explorer."""
from __future__ import annotations

from collections.abc import Iterable

import pandas as pd

from powersum.audit import AuditRecord
from powersum.elliptic import CurvePoint, WeierstrassCurve, curve_multiples, integrality_check
from powersum.exactcore import PowerSumPair, verify_pair
from powersum.tables import TABLE_A, Erratum


def _side(values) -> str:
    return ", ".join(str(v) for v in values)


def residual_frame(pair: PowerSumPair, degrees: Iterable[int] | None = None) -> pd.DataFrame:
    report = verify_pair(pair, degrees)
    return pd.DataFrame(
        {
            "k": list(report.residuals),
            "residual": [str(v) for v in report.residuals.values()],
            "passes": [v == 0 for v in report.residuals.values()],
        }
    )


def pairs_frame(pairs: Iterable[PowerSumPair]) -> pd.DataFrame:
    rows = [
        {
            "lhs": _side(pair.lhs),
            "rhs": _side(pair.rhs),
            "degrees": _side(sorted(pair.degrees)),
            "valid": verify_pair(pair).passed,
            "source": pair.source,
        }
        for pair in pairs
    ]
    return pd.DataFrame(rows, columns=["lhs", "rhs", "degrees", "valid", "source"])


def table_a_frame() -> pd.DataFrame:
    rows = []
    for row in TABLE_A:
        report = verify_pair(row.pair())
        rows.append(
            {
                "n": row.n,
                "lhs": _side(row.lhs),
                "rhs": _side(row.rhs),
                "checked at": _side(sorted(row.degrees)),
                "passes": report.passed,
                "note": row.note,
            }
        )
    return pd.DataFrame(rows)


def audit_frame(records: Iterable[AuditRecord]) -> pd.DataFrame:
    rows = [
        {
            "example": record.key,
            "printed": f"{_side(record.printed.lhs)} | {_side(record.printed.rhs)}",
            "printed valid": record.passed,
            "reproduced": {True: "yes", False: "no", None: "n/a"}[record.matches],
            "error": record.error or "",
        }
        for record in records
    ]
    return pd.DataFrame(rows)


def errata_frame(results: Iterable[tuple[Erratum, bool]]) -> pd.DataFrame:
    rows = [
        {"key": erratum.key, "as printed": erratum.claim, "resolution": erratum.resolution, "holds": holds}
        for erratum, holds in results
    ]
    return pd.DataFrame(rows, columns=["key", "as printed", "resolution", "holds"])


def multiples_frame(curve: WeierstrassCurve, point: CurvePoint, count: int) -> pd.DataFrame:
    rows = []
    for n, multiple in curve_multiples(curve, point, count):
        if multiple.is_infinity:
            rows.append({"n": n, "x": "O", "y": "O", "x (float)": None, "y (float)": None, "integral": None})
            continue
        rows.append(
            {
                "n": n,
                "x": str(multiple.x),
                "y": str(multiple.y),
                "x (float)": float(multiple.x),
                "y (float)": float(multiple.y),
                "integral": integrality_check(multiple),
            }
        )
    return pd.DataFrame(rows)
