import functools
import inspect
from typing import Callable

import numpy as np

from ._errors import InvalidParameterError

__all__ = ['require_positive', 'check_positive', 'check_range']


def require_positive(*param_names: str, allow_zero: bool = False) -> Callable:
    """
    Decorator to validate that numeric arguments are strictly positive (or non-negative).

    :param param_names: Names of the parameters to check. Quantities are unwrapped through their ``value``.
    :param allow_zero: bool: If True, zero passes the check
    :return: Callable: Decorated function

    Arguments that are None are skipped, so optional parameters can be listed too.
    """

    def decorator(func: Callable) -> Callable:
        signature = inspect.signature(func)

        @functools.wraps(func)
        def wrapper(*args, **kwargs):
            bound = signature.bind(*args, **kwargs)
            bound.apply_defaults()

            for name in param_names:
                value = bound.arguments.get(name)
                if value is None:
                    continue
                check_positive(name, value, allow_zero=allow_zero)

            return func(*args, **kwargs)

        return wrapper

    return decorator


def check_positive(name: str, value, allow_zero: bool = False) -> None:
    """
    Check that a scalar or array is positive everywhere.

    :param name: str: Parameter name used in the error message
    :param value: Scalar, array or quantity with a ``value`` attribute
    :param allow_zero: bool: If True, zero passes the check
    :raise: InvalidParameterError: If any element fails the check or is NaN
    """
    raw = np.asarray(getattr(value, 'value', value), dtype=float)

    if np.any(np.isnan(raw)):
        raise InvalidParameterError(value, f"{name} must not be NaN")

    if allow_zero:
        if np.any(raw < 0):
            raise InvalidParameterError(value, f"{name} must be >= 0, got {value}")
    elif np.any(raw <= 0):
        raise InvalidParameterError(value, f"{name} must be > 0, got {value}")


def check_range(name: str, value: float, low: float, high: float, high_inclusive: bool = True) -> None:
    """
    Check that a scalar lies in [low, high] (or [low, high) when high_inclusive is False).

    :param name: str: Parameter name used in the error message
    :param value: float: Value to check
    :param low: float: Inclusive lower bound
    :param high: float: Upper bound
    :param high_inclusive: bool: Whether the upper bound is part of the range
    :raise: InvalidParameterError: If the value lies outside the range
    """
    above = value > high if high_inclusive else value >= high
    if value < low or above:
        closing = ']' if high_inclusive else ')'
        raise InvalidParameterError(value, f"{name} must lie in [{low}, {high}{closing}, got {value}")
