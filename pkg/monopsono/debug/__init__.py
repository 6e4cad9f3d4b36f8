"""
Structured logging and development observability tools.
"""

from .core.categories import Categories, configure_logging
from .logger import StructuredLogger

__all__ = ["Categories", "StructuredLogger", "configure_logging"]
