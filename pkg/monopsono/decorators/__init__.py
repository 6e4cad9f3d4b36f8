"""
Logging and performance decorators.
"""

from .logging import log_exceptions, log_function_call
from .performance import stage_monitor

__all__ = ["log_exceptions", "log_function_call", "stage_monitor"]
