"""Quantities derived from a fitted rate constant."""

from __future__ import annotations

from collections.abc import Iterable
import math

from sample_space_entropy.const import LN2
from sample_space_entropy.data import FitResult, SeriesPoint
from sample_space_entropy.exceptions import SampleSpaceEntropyDomainError
from sample_space_entropy.utils import ensure_finite, ensure_nonnegative_time, ensure_positive


def annual_growth_rate(rate: float) -> float:
    """
    Return the compound growth per unit time, exp(lambda) - 1.

    Example:
        >>> round(annual_growth_rate(0.0555), 5)
        0.05707

    """
    return math.expm1(ensure_finite(rate, "lambda"))


def doubling_time(rate: float) -> float:
    """Return the time ln(2) / lambda needed for the sample space to double."""
    return LN2 / ensure_positive(rate, "lambda")


def entropy_series(fit: FitResult, times: Iterable[float]) -> list[SeriesPoint]:
    """
    Return H(t) = lambda_hat * t at each time, relative to the t = 0 reference.

    Raises:
        SampleSpaceEntropyDomainError: If any time is negative.

    """
    return [SeriesPoint(t, fit.lambda_hat * t) for t in (ensure_nonnegative_time(t, "t", ceiling=None) for t in times)]


def probability_series(fit: FitResult, times: Iterable[float]) -> list[SeriesPoint]:
    """
    Return p(x0|t) = exp(-lambda_hat * t) at each time.

    The probability is taken relative to the sample space at t = 0, so it is
    1 at the reference time whatever the fitted s0.

    Raises:
        SampleSpaceEntropyDomainError: If any time is negative, or the fitted series
            shrinks so the probability would exceed 1.

    """
    if fit.lambda_hat < 0.0:
        msg = f"lambda_hat={fit.lambda_hat} < 0: a shrinking series has no expansion probability"
        raise SampleSpaceEntropyDomainError(msg)
    return [
        SeriesPoint(t, math.exp(-fit.lambda_hat * t))
        for t in (ensure_nonnegative_time(t, "t", ceiling=None) for t in times)
    ]
