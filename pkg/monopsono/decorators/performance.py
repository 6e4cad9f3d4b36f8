"""
Performance monitoring decorators for pipeline stages.
"""

import functools
import time

from monopsono.common_conf import settings
from monopsono.debug.core.categories import Categories

try:
    import psutil
except ImportError:  # pragma: no cover - optional extra
    psutil = None


def _rss_megabytes():
    """Resident set size of the current process in MB, if psutil is available."""
    if psutil is None:
        return None
    return psutil.Process().memory_info().rss / (1024 * 1024)


def stage_monitor(stage=None, threshold=None):
    """
    Monitor pipeline stage execution time with a configurable warning threshold.

    Logs a warning for stages slower than ``threshold`` seconds (default
    ``SLOW_STAGE_THRESHOLD``), an info record otherwise, and the elapsed time
    when the stage raises. Memory figures are added when psutil is installed.

    Args:
        stage (str): Stage label. If None, uses the function name
        threshold (float): Duration in seconds above which to log warnings

    Returns:
        Decorated function with stage monitoring
    """

    def decorator(func):
        label = stage or func.__name__

        @functools.wraps(func)
        def wrapper(*args, **kwargs):
            logger = Categories.get_logger(
                f"performance.{label}", Categories.PERFORMANCE
            )
            limit = settings.SLOW_STAGE_THRESHOLD if threshold is None else threshold

            start_time = time.perf_counter()

            try:
                result = func(*args, **kwargs)
                duration = time.perf_counter() - start_time
                memory = _rss_megabytes()
                suffix = f" rss={memory:.1f}MB" if memory is not None else ""

                if duration > limit:
                    logger.warning(f"Slow stage: {label} - {duration:.4f}s{suffix}")
                else:
                    logger.info(f"Stage timing: {label} - {duration:.4f}s{suffix}")

                return result
            except Exception as e:
                duration = time.perf_counter() - start_time
                logger.error(f"Stage failed: {label} - {duration:.4f}s: {e}")
                raise

        return wrapper

    return decorator
