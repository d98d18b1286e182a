"""Environment-driven configuration for the engine, oracles and CLI."""
from __future__ import annotations

import logging
import os
from dataclasses import dataclass

from dotenv import load_dotenv

log = logging.getLogger(__name__)

MAX_STAR_ORDER = 8


def _int_from_env(key: str, default: int) -> int:
    value = os.getenv(key)
    if value is None:
        return default
    try:
        return int(value)
    except ValueError:
        log.warning("Invalid integer for %s=%s; using default %s", key, value, default)
        return default


def _float_from_env(key: str, default: float) -> float:
    value = os.getenv(key)
    if value is None:
        return default
    try:
        return float(value)
    except ValueError:
        log.warning("Invalid number for %s=%s; using default %s", key, value, default)
        return default


def _bool_from_env(key: str, default: bool = False) -> bool:
    value = (os.getenv(key) or "").strip().lower()
    if not value:
        return default
    return value in {"1", "true", "yes", "on"}


@dataclass(frozen=True)
class Settings:
    log_level: str = "INFO"
    star_order: int = 4
    oracle_max_vertices: int = 20
    churn_bound: float = 10.0
    probe_factor: float = 3.0
    scaling_workers: int = 4
    full_acceptance: bool = False


def get_settings() -> Settings:
    """Read settings from the environment (and ``.env`` if present)."""
    load_dotenv()
    star_order = _int_from_env("HSTAT_STAR_ORDER", 4)
    if not 1 <= star_order <= MAX_STAR_ORDER:
        log.warning("HSTAT_STAR_ORDER=%s outside 1..%s; clamping", star_order, MAX_STAR_ORDER)
        star_order = min(max(star_order, 1), MAX_STAR_ORDER)
    return Settings(
        log_level=(os.getenv("HSTAT_LOG_LEVEL") or "INFO").strip().upper(),
        star_order=star_order,
        oracle_max_vertices=max(3, _int_from_env("HSTAT_ORACLE_MAX_VERTICES", 20)),
        churn_bound=_float_from_env("HSTAT_CHURN_BOUND", 10.0),
        probe_factor=_float_from_env("HSTAT_PROBE_FACTOR", 3.0),
        scaling_workers=max(1, _int_from_env("HSTAT_SCALING_WORKERS", 4)),
        full_acceptance=_bool_from_env("HSTAT_FULL_ACCEPTANCE"),
    )


__all__ = ["Settings", "get_settings", "MAX_STAR_ORDER"]
