"""Runtime settings.

The only environment coupling is ``POWERSUM_WORKERS``; everything else comes
from command-line flags.
"""
from __future__ import annotations

import logging
import os
from collections.abc import Mapping
from dataclasses import dataclass, replace

from powersum.errors import ConfigError

logger = logging.getLogger(__name__)

WORKERS_ENV = "POWERSUM_WORKERS"
DEFAULT_WORK_CEILING = 10**8
DEFAULT_LOG_LEVEL = "WARNING"
LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR")


@dataclass(frozen=True)
class Settings:
    workers: int = 1
    work_ceiling: int = DEFAULT_WORK_CEILING
    log_level: str = DEFAULT_LOG_LEVEL

    def with_overrides(self, **overrides) -> Settings:
        """Apply non-None overrides (typically parsed CLI flags)."""
        changes = {key: value for key, value in overrides.items() if value is not None}
        settings = replace(self, **changes)
        _validate(settings)
        return settings


def _validate(settings: Settings) -> None:
    if settings.workers < 1:
        raise ConfigError(f"workers must be >= 1, got {settings.workers}")
    if settings.work_ceiling < 1:
        raise ConfigError(f"work ceiling must be >= 1, got {settings.work_ceiling}")
    if settings.log_level.upper() not in LOG_LEVELS:
        raise ConfigError(f"log level must be one of {', '.join(LOG_LEVELS)}, got {settings.log_level!r}")


def load_settings(environ: Mapping[str, str] | None = None) -> Settings:
    """Build settings from the environment (``os.environ`` by default)."""
    env = os.environ if environ is None else environ
    raw = env.get(WORKERS_ENV)
    if raw is None or not raw.strip():
        return Settings()
    try:
        workers = int(raw.strip())
    except ValueError:
        raise ConfigError(f"{WORKERS_ENV} must be a positive integer, got {raw!r}") from None
    settings = Settings(workers=workers)
    _validate(settings)
    logger.debug("workers=%d from %s", workers, WORKERS_ENV)
    return settings
