"""
Logging categories.

Loggers live under the ``monopsono`` namespace, one child per category,
and are silenced when their category is not listed in
``ENABLED_LOG_CATEGORIES``.
"""

import json
import logging
import sys

from monopsono.common_conf import settings

ROOT_LOGGER = "monopsono"

TEXT_FORMAT = "%(levelname)s %(name)s %(message)s"

LEVELS = {
    "error": logging.ERROR,
    "warning": logging.WARNING,
    "info": logging.INFO,
    "debug": logging.DEBUG,
}


class Categories:
    """Logging categories used across the library."""

    DATA = "data"
    CONCENTRATION = "concentration"
    DELINEATION = "delineation"
    ESTIMATION = "estimation"
    SIMULATION = "simulation"
    PIPELINE = "pipeline"
    PERFORMANCE = "performance"
    ERRORS = "errors"

    ALL = (
        DATA,
        CONCENTRATION,
        DELINEATION,
        ESTIMATION,
        SIMULATION,
        PIPELINE,
        PERFORMANCE,
        ERRORS,
    )

    @classmethod
    def is_enabled(cls, category: str) -> bool:
        enabled = settings.ENABLED_LOG_CATEGORIES
        return category in enabled

    @classmethod
    def get_logger(cls, name: str, category: str) -> logging.Logger:
        """
        Return the logger for ``name`` filed under ``category``.

        Loggers of disabled categories are returned with ``disabled`` set so
        call sites never need to check.
        """
        if category not in cls.ALL:
            raise ValueError(f"Unknown logging category '{category}'")
        logger = logging.getLogger(f"{ROOT_LOGGER}.{category}.{name}")
        logger.disabled = not cls.is_enabled(category)
        return logger


def resolve_level(value) -> int:
    """Map a ``LOG`` setting value to a logging level."""
    key = str(value).strip().lower()
    if key not in LEVELS:
        raise ValueError(
            f"Invalid log level '{value}'. Expected one of {sorted(LEVELS)}"
        )
    return LEVELS[key]


class JsonLineFormatter(logging.Formatter):
    """One JSON object per line; JSON messages are nested under ``record``."""

    def format(self, record):
        message = record.getMessage()
        try:
            body = json.loads(message)
        except ValueError:
            body = message
        line = {"level": record.levelname.lower(), "logger": record.name, "record": body}
        if record.exc_info:
            line["exc_info"] = self.formatException(record.exc_info)
        return json.dumps(line, sort_keys=True)


def build_formatter(kind=None) -> logging.Formatter:
    """Formatter for a ``LOG_FORMAT`` value, ``json`` or ``text``."""
    key = str(kind if kind is not None else settings.LOG_FORMAT).strip().lower()
    if key == "json":
        return JsonLineFormatter()
    if key == "text":
        return logging.Formatter(TEXT_FORMAT)
    raise ValueError(f"Invalid log format '{key}'. Expected 'json' or 'text'")


def configure_logging(level=None, stream=None, fmt=None) -> logging.Logger:
    """
    Attach a single stderr handler to the package root logger.

    Repeated calls replace the handler instead of stacking new ones.
    """
    root = logging.getLogger(ROOT_LOGGER)
    root.setLevel(resolve_level(level if level is not None else settings.LOG))
    for handler in list(root.handlers):
        if getattr(handler, "_monopsono", False):
            root.removeHandler(handler)
    handler = logging.StreamHandler(stream or sys.stderr)
    handler._monopsono = True  # type: ignore[attr-defined]
    handler.setFormatter(build_formatter(fmt))
    root.addHandler(handler)
    root.propagate = False
    return root
