"""Helpers shared by the per-degree constructors."""
from __future__ import annotations

import logging
from collections.abc import Mapping
from typing import Any

from powersum.errors import ConditionError
from powersum.exactcore import PolyPair, PowerSumPair, clear_denominators, verify_pair

logger = logging.getLogger(__name__)


def format_params(**params: Any) -> str:
    return " ".join(f"{name}={value}" for name, value in params.items())


def instantiate(template: PolyPair, bindings: Mapping[str, Any], source: str) -> PowerSumPair:
    """Evaluate a symbolic family and scale it to integer entries."""
    pair = clear_denominators(template.evaluate(bindings, source=source))
    if pair.is_trivial:
        logger.info("%s gives identical multisets on both sides", source)
    return pair


def require_valid(pair: PowerSumPair, what: str) -> PowerSumPair:
    """Raise ConditionError carrying the first nonzero residual if the pair fails."""
    report = verify_pair(pair)
    if not report.passed:
        k = report.failing[0]
        raise ConditionError(
            f"{what} failed at k={k}",
            residual=report.residuals[k],
            details={"failing": report.failing},
        )
    return pair
