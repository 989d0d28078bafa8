"""Argument validation utilities for sample_space_entropy."""

from __future__ import annotations

import math

from sample_space_entropy.const import MAX_SCALED_TIME
from sample_space_entropy.exceptions import SampleSpaceEntropyDomainError


def ensure_finite(value: float, name: str) -> float:
    """
    Return value as a float, rejecting NaN and infinities.

    Example:
        >>> ensure_finite(2, "lambda")
        2.0

    """
    value = float(value)
    if not math.isfinite(value):
        msg = f"{name} must be finite, got {value}"
        raise SampleSpaceEntropyDomainError(msg)
    return value


def ensure_nonnegative_time(value: float, name: str = "T", *, ceiling: float | None = MAX_SCALED_TIME) -> float:
    """
    Validate a time argument.

    Args:
        value: The time to validate.
        name: Argument name used in the error message.
        ceiling: Optional inclusive upper bound.

    Returns:
        The time as a float.

    Raises:
        SampleSpaceEntropyDomainError: If the time is negative, non-finite or above the ceiling.

    Example:
        >>> ensure_nonnegative_time(1.5)
        1.5

    """
    value = ensure_finite(value, name)
    if value < 0.0:
        msg = f"{name} must be >= 0, got {value}"
        raise SampleSpaceEntropyDomainError(msg)
    if ceiling is not None and value > ceiling:
        msg = f"{name} must be <= {ceiling:g}, got {value}"
        raise SampleSpaceEntropyDomainError(msg)
    return value


def ensure_positive(value: float, name: str) -> float:
    """Return value as a float, rejecting anything not strictly positive and finite."""
    value = ensure_finite(value, name)
    if value <= 0.0:
        msg = f"{name} must be > 0, got {value}"
        raise SampleSpaceEntropyDomainError(msg)
    return value
