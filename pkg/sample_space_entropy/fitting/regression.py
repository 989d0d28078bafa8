"""
Log-linear least squares fit of a mono-exponential time series.

ln(value) is regressed on t by ordinary least squares, so the slope is the
rate constant and exp(intercept) the size at t = 0. The coefficient of
determination is reported in log space, where the fit is made, and for the
fitted curve against the raw values.
"""

from __future__ import annotations

import math

import numpy as np

from sample_space_entropy.const import LOGGER
from sample_space_entropy.data import FitResult, TimeSeries
from sample_space_entropy.exceptions import SampleSpaceEntropyValidationError


def _coefficient_of_determination(observed: np.ndarray, fitted: np.ndarray) -> float | None:
    total = float(np.sum((observed - observed.mean()) ** 2))
    if total == 0.0:
        return None
    residual = float(np.sum((observed - fitted) ** 2))
    return 1.0 - residual / total


def fit_mono_exponential(series: TimeSeries) -> FitResult:
    """
    Fit s(t) = s0 * exp(lambda * t) to a series by least squares on ln(value).

    Args:
        series: At least two observations with strictly increasing times and positive values.

    Returns:
        The fitted parameters, log-space and raw-space R², and log-space residuals.

    Raises:
        SampleSpaceEntropyValidationError: If the series has fewer than 2 points, a
            nonpositive value, or no spread in time.

    """
    times = np.asarray(series.times, dtype=np.float64)
    values = np.asarray(series.values, dtype=np.float64)
    if times.size < 2:
        msg = f"need at least 2 points, got {times.size}"
        raise SampleSpaceEntropyValidationError(msg)
    if np.any(values <= 0.0):
        msg = "nonpositive value in series"
        raise SampleSpaceEntropyValidationError(msg)

    center = float(times.mean())
    offsets = times - center
    if not np.any(offsets):
        msg = "zero time variance: all observations share one time"
        raise SampleSpaceEntropyValidationError(msg)

    log_values = np.log(values)
    design = np.column_stack((np.ones_like(offsets), offsets))
    (level, slope), *_ = np.linalg.lstsq(design, log_values, rcond=None)
    intercept = float(level) - float(slope) * center

    fitted_log = intercept + slope * times
    residuals = log_values - fitted_log
    r_squared = _coefficient_of_determination(log_values, fitted_log)
    r_squared = 1.0 if r_squared is None else min(max(r_squared, 0.0), 1.0)

    r_squared_raw = _coefficient_of_determination(values, np.exp(fitted_log))
    if r_squared_raw is None:
        LOGGER.warning("Raw values have no variance, raw-space R² is undefined")

    result = FitResult(
        s0_hat=math.exp(intercept),
        lambda_hat=float(slope),
        r_squared=r_squared,
        residuals_log=tuple(float(residual) for residual in residuals),
        r_squared_raw=r_squared_raw,
        n_points=int(times.size),
    )
    LOGGER.debug(
        "Fitted %d points from origin %s: s0=%.9g lambda=%.9g R2(log)=%.6f",
        result.n_points,
        series.origin_label,
        result.s0_hat,
        result.lambda_hat,
        result.r_squared,
    )
    return result
