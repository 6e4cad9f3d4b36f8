"""
Structured JSON logger for pipeline observability.
"""

import json
import math
from enum import Enum
from typing import Any, Dict, Mapping, Optional

from .core.categories import Categories


def _jsonable(value: Any) -> Any:
    if isinstance(value, Enum):
        return value.value
    if isinstance(value, Mapping):
        return {str(k): _jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple, set)):
        return [_jsonable(v) for v in value]
    if hasattr(value, "tolist") and callable(value.tolist):
        return _jsonable(value.tolist())
    if isinstance(value, float) and not math.isfinite(value):
        return None
    if isinstance(value, (str, int, float, bool)) or value is None:
        return value
    return str(value)


class StructuredLogger:
    """Emits one JSON object per record, keyed by ``event``."""

    def __init__(self, name: str):
        self.name = name
        self.pipeline = Categories.get_logger(name, Categories.PIPELINE)
        self.data = Categories.get_logger(name, Categories.DATA)
        self.errors = Categories.get_logger(name, Categories.ERRORS)
        self.performance = Categories.get_logger(name, Categories.PERFORMANCE)

    @staticmethod
    def _render(event: str, payload: Dict[str, Any]) -> str:
        return json.dumps({"event": event, **_jsonable(payload)}, sort_keys=True)

    def log_stage(self, stage: str, status: str, details: Optional[dict] = None):
        """Log a pipeline stage transition."""
        self.pipeline.info(
            self._render("stage", {"stage": stage, "status": status, **(details or {})})
        )

    def log_manifest(self, manifest: dict):
        """Log the run manifest of a subcommand."""
        self.pipeline.info(self._render("manifest", manifest))

    def log_error(self, error: Exception, context: Optional[dict] = None):
        """Log an error with its class and optional context."""
        self.errors.error(
            self._render(
                "error",
                {
                    "type": type(error).__name__,
                    "message": str(error),
                    "context": context or {},
                },
            )
        )

    def log_performance(
        self, operation: str, duration: float, details: Optional[dict] = None
    ):
        """Log the duration of an operation in seconds."""
        self.performance.info(
            self._render(
                "performance",
                {"operation": operation, "duration": round(duration, 6), **(details or {})},
            )
        )

    def log_skip_report(self, stage: str, skipped: Mapping[str, Any]):
        """Log records dropped by a stage, keyed by reason."""
        if not skipped:
            return
        self.data.info(self._render("skip_report", {"stage": stage, "skipped": skipped}))
