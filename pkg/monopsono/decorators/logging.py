"""
Call and failure logging for library entry points.
"""

import dataclasses
import functools
import logging
import time

import numpy as np
import pandas as pd

from monopsono.core.exceptions import MonopsonoError
from monopsono.debug.core.categories import Categories

MAX_RENDERED_LENGTH = 256


def _clip(text, limit):
    if limit is None or len(text) <= limit:
        return text
    return f"{text[:limit]}... <{len(text) - limit} more chars>"


def describe(value, limit=MAX_RENDERED_LENGTH):
    """
    Short rendering of an argument or result for debug logs.

    Frames and arrays are reduced to their shape, dataclasses to their
    class name and field names; anything else is ``repr`` clipped to
    ``limit`` characters.
    """
    if isinstance(value, pd.DataFrame):
        return f"DataFrame[{value.shape[0]}x{value.shape[1]}]"
    if isinstance(value, pd.Series):
        return f"Series[{value.size}] {value.name!r}"
    if isinstance(value, np.ndarray):
        return f"ndarray{value.shape} {value.dtype}"
    if dataclasses.is_dataclass(value) and not isinstance(value, type):
        names = ",".join(field.name for field in dataclasses.fields(value))
        return f"{type(value).__name__}({names})"
    return _clip(repr(value), limit)


def log_function_call(
    logger_name=None,
    log_args=True,
    log_result=True,
    category=Categories.PERFORMANCE,
    failure_level=logging.ERROR,
):
    """
    Log entry, elapsed time and outcome of a call at debug level.

    Arguments and results go through ``describe``; nothing is rendered
    unless the logger is enabled for debug records.

    Args:
        logger_name (str): Custom logger name. If None, uses module.function_name
        log_args (bool): Include a description of the arguments
        log_result (bool): Include a description of the return value
        category (str): Logging category
        failure_level (int): Level of the record written when the call raises

    Returns:
        Decorated function with call logging
    """

    def decorator(func):
        name = func.__name__

        @functools.wraps(func)
        def wrapper(*args, **kwargs):
            logger = Categories.get_logger(logger_name or f"{func.__module__}.{name}", category)
            verbose = logger.isEnabledFor(logging.DEBUG)
            if verbose:
                if log_args:
                    rendered = ", ".join(
                        [describe(arg) for arg in args]
                        + [f"{key}={describe(arg)}" for key, arg in kwargs.items()]
                    )
                    logger.debug(f"{name}({rendered})")
                else:
                    logger.debug(f"{name}()")
            started = time.perf_counter()
            try:
                result = func(*args, **kwargs)
            except Exception as e:
                logger.log(
                    failure_level,
                    f"{name} raised {type(e).__name__} after "
                    f"{time.perf_counter() - started:.4f}s: {e}",
                )
                raise
            if verbose:
                elapsed = time.perf_counter() - started
                outcome = f" -> {describe(result)}" if log_result else ""
                logger.debug(f"{name} finished in {elapsed:.4f}s{outcome}")
            return result

        return wrapper

    return decorator


def log_exceptions(logger_name=None, reraise=True, catch=(Exception,), level=logging.ERROR):
    """
    Log exceptions of the ``catch`` types raised by the wrapped function.

    Library errors are logged with their label and no traceback; other
    exceptions carry the traceback. Exceptions outside ``catch`` pass
    through untouched.

    Args:
        logger_name (str): Custom logger name. If None, uses errors.function_name
        reraise (bool): Re-raise after logging; if False the call returns None
        catch (tuple): Exception types to handle
        level (int): Logging level of the record

    Returns:
        Decorated function with exception logging
    """

    def decorator(func):
        @functools.wraps(func)
        def wrapper(*args, **kwargs):
            try:
                return func(*args, **kwargs)
            except catch as e:
                logger = Categories.get_logger(
                    logger_name or f"errors.{func.__name__}", Categories.ERRORS
                )
                extra = {"function": func.__name__, "exception_type": type(e).__name__}
                if isinstance(e, MonopsonoError):
                    extra["label"] = e.label
                    logger.log(level, f"{func.__name__}: {e.label}: {e}", extra=extra)
                else:
                    logger.log(
                        level,
                        f"{type(e).__name__} in {func.__name__}: {e}",
                        exc_info=True,
                        extra=extra,
                    )
                if reraise:
                    raise
                return None

        return wrapper

    return decorator
