"""
monopsono Library Settings

Centralized configuration management with MONOPSONO_ environment override
support. Settings are resolved dynamically on each access.
"""

import json
import os
from contextlib import contextmanager
from typing import Any, Dict, Iterator

ENV_PREFIX = "MONOPSONO_"

DEFAULT_SETTINGS: Dict[str, Any] = {
    # Logging
    "LOG": "info",
    "LOG_FORMAT": "json",
    "ENABLED_LOG_CATEGORIES": [
        "data",
        "concentration",
        "delineation",
        "estimation",
        "simulation",
        "pipeline",
        "performance",
        "errors",
    ],
    "SLOW_STAGE_THRESHOLD": 5.0,
    # Concentration
    "SHARE_TOLERANCE": 1e-12,
    "CONCENTRATION_BAND_EDGES": [0.1, 0.2],
    "CONCENTRATION_K": 1,
    # Wages and minimum wages
    "DAYS_PER_WEEK": 7,
    "HOURS_PER_WEEK": 40,
    "KAITZ_CUTS": [0.68, 0.79, 0.92, 1.15],
    "HHI_BAND_EDGES": [0.0, 0.05, 0.10, 0.20, 0.40, 1.00],
    "BERLIN_DEFAULT_TERRITORY": "west",
    "BERLIN_SECTOR_TERRITORY": {},
    "IMPLICIT_MINWAGE_PERCENTILE": 5,
    # Estimation
    "DEMEAN_TOL": 1e-8,
    "DEMEAN_MAX_ITER": 10_000,
    "CLUSTER_CORRECTION": "CR1",
    "CONLEY_GRID_POINTS": 101,
    "CONLEY_LEVEL": 0.90,
    "BOOTSTRAP_REPLICATIONS": 50,
    "BOOTSTRAP_MAX_FAILURE_SHARE": 0.2,
    "RATIO_MIN_DENOMINATOR": 1e-6,
    "LOO_STRICT_DIVISOR": False,
    # Delineation
    "DELINEATION_GRID": [round(0.01 * step, 2) for step in range(1, 31)],
    # Pipeline
    "THREADS": 1,
    "CSV_FLOAT_FORMAT": "%.10g",
    # Spreadsheet report
    "EXPORT_HEADER_COLOR": "2F5597",
    "EXPORT_TITLE_FONT_SIZE": 14,
    "EXPORT_COLUMN_WIDTH": 16,
}


def _parse_env_value(raw: str) -> Any:
    """Decode an environment value as JSON, falling back to the raw string."""
    try:
        return json.loads(raw)
    except (TypeError, ValueError):
        return raw


class CommonSettings:
    """Manages library settings with runtime and environment overrides."""

    def __init__(self) -> None:
        self._overrides: Dict[str, Any] = {}

    def get(self, key: str, default: Any = None) -> Any:
        """Retrieve setting value with override, then MONOPSONO_ environment."""
        if key in self._overrides:
            return self._overrides[key]
        env_key = f"{ENV_PREFIX}{key}"
        if env_key in os.environ:
            return _parse_env_value(os.environ[env_key])
        return default

    def __getattr__(self, name: str) -> Any:
        if name in DEFAULT_SETTINGS:
            return self.get(name, DEFAULT_SETTINGS[name])
        raise AttributeError(f"Unknown setting '{name}'")

    def set_overrides(self, **values: Any) -> None:
        for key in values:
            if key not in DEFAULT_SETTINGS:
                raise AttributeError(f"Unknown setting '{key}'")
        self._overrides.update(values)

    def clear_overrides(self) -> None:
        self._overrides.clear()


_settings = CommonSettings()


def __getattr__(name: str) -> Any:
    if name in DEFAULT_SETTINGS:
        return _settings.get(name, DEFAULT_SETTINGS[name])
    raise AttributeError(f"module '{__name__}' has no attribute '{name}'")


def get_setting(key: str, default: Any = None) -> Any:
    """Get setting value with override support."""
    fallback = (
        DEFAULT_SETTINGS[key] if key in DEFAULT_SETTINGS and default is None else default
    )
    return _settings.get(key, fallback)


@contextmanager
def override_settings(**values: Any) -> Iterator[None]:
    """Temporarily override settings for the duration of the block."""
    previous = dict(_settings._overrides)
    _settings.set_overrides(**values)
    try:
        yield
    finally:
        _settings._overrides.clear()
        _settings._overrides.update(previous)


def reset_overrides() -> None:
    """Drop every runtime override."""
    _settings.clear_overrides()
