"""Exception hierarchy for powersum.

Library code raises these; only the CLI and the explorer turn them into
reports, exit codes or on-screen messages.
"""
from __future__ import annotations

from typing import Any


class PowersumError(Exception):
    """Base class for every error raised by the package."""


class ConfigError(PowersumError):
    """Invalid environment or command-line configuration."""


class PolyDomainError(PowersumError, ValueError):
    """A polynomial operation was asked for something outside its domain."""


# ---------------------------------------------------------------------------
# Mathematical condition failures (CLI exit status 1)
# ---------------------------------------------------------------------------


class ConditionError(PowersumError):
    """A construction's side condition does not hold."""

    def __init__(self, message: str, residual: Any = None, details: dict[str, Any] | None = None):
        super().__init__(message)
        self.residual = residual
        self.details = dict(details or {})


class DegenerateShiftError(ConditionError):
    pass


class SymmetryConditionError(ConditionError):
    pass


class NotRepresentableError(ConditionError):
    pass


class NoRationalRootError(ConditionError):
    pass


class QuarticConditionError(ConditionError):
    pass


class PreconditionError(ConditionError):
    """Input pair is not valid at the degrees a construction requires."""

    def __init__(self, message: str, failing: list[int], residual: Any = None):
        super().__init__(message, residual=residual, details={"failing": list(failing)})
        self.failing = list(failing)


class BaseInvariantError(ConditionError):
    pass


class NotAdmissibleError(ConditionError):
    """The chosen w does not annihilate the degree-9 residual."""

    def __init__(self, message: str, polynomial: Any, residual: Any = None):
        super().__init__(message, residual=residual, details={"polynomial": str(polynomial)})
        self.polynomial = polynomial


# ---------------------------------------------------------------------------
# Curve errors (CLI exit status 1)
# ---------------------------------------------------------------------------


class CurveError(PowersumError):
    pass


class SingularCurveError(CurveError):
    pass


class OffCurveError(CurveError):
    pass


class ExceptionalPointError(CurveError):
    """A birational map is undefined at the given point.

    ``point`` is the point on the other side of the bridge when one is known, so
    callers can keep working on the Weierstrass side. ``designated`` is the image
    fixed by convention for the exceptional locus, if any.
    """

    def __init__(self, message: str, point: Any = None, designated: Any = None):
        super().__init__(message)
        self.point = point
        self.designated = designated


# ---------------------------------------------------------------------------
# Search
# ---------------------------------------------------------------------------


class SearchTooLargeError(PowersumError):
    def __init__(self, estimate: int, ceiling: int):
        super().__init__(
            f"search needs about {estimate:,} side joins or candidate pairs, above the ceiling of {ceiling:,}; "
            "lower --height or raise --work-ceiling"
        )
        self.estimate = estimate
        self.ceiling = ceiling
