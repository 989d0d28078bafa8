"""Tests for the log-linear mono-exponential fit."""

from __future__ import annotations

import logging
import math

from hypothesis import assume, given, settings, strategies as st
import pytest

from sample_space_entropy.const import BROAD_MONEY_LAMBDA, BROAD_MONEY_S0
from sample_space_entropy.data import SeriesPoint, TimeSeries
from sample_space_entropy.fitting import fit_mono_exponential

pytestmark = pytest.mark.unit


def test_noiseless_round_trip(broad_money_noiseless: TimeSeries) -> None:
    fit = fit_mono_exponential(broad_money_noiseless)
    assert fit.s0_hat == pytest.approx(BROAD_MONEY_S0, rel=1e-9)
    assert fit.lambda_hat == pytest.approx(BROAD_MONEY_LAMBDA, rel=1e-9)
    assert fit.r_squared == pytest.approx(1.0, abs=1e-12)
    assert fit.r_squared_raw == pytest.approx(1.0, abs=1e-12)
    assert fit.n_points == 19
    assert max(abs(residual) for residual in fit.residuals_log) < 1e-12


def test_noisy_fixture_is_log_uniform(broad_money_noiseless: TimeSeries, broad_money_noisy: TimeSeries) -> None:
    """Each noisy value is the noiseless one times exp(epsilon) with |epsilon| <= 0.02."""
    offsets = [
        math.log(noisy / clean)
        for noisy, clean in zip(broad_money_noisy.values, broad_money_noiseless.values, strict=True)
    ]
    assert len(offsets) == 19
    assert all(abs(offset) <= 0.02 + 1e-12 for offset in offsets)
    assert len(set(offsets)) == 19


def test_noisy_fixture(broad_money_noisy: TimeSeries) -> None:
    """+-2% multiplicative noise keeps lambda within 5% and R² above 0.97."""
    fit = fit_mono_exponential(broad_money_noisy)
    assert fit.lambda_hat == pytest.approx(BROAD_MONEY_LAMBDA, rel=0.05)
    assert fit.r_squared >= 0.97
    assert fit.r_squared_raw is not None
    assert fit.r_squared_raw >= 0.97
    assert len(fit.residuals_log) == 19


def test_two_points_fit_exactly() -> None:
    fit = fit_mono_exponential(TimeSeries("0", ((0.0, 1.0), (1.0, math.e))))
    assert fit.s0_hat == pytest.approx(1.0, rel=1e-12)
    assert fit.lambda_hat == pytest.approx(1.0, rel=1e-12)
    assert fit.r_squared == 1.0


def test_constant_series(caplog: pytest.LogCaptureFixture) -> None:
    """A flat series fits lambda = 0 and has no raw-space R²."""
    series = TimeSeries("0", tuple(SeriesPoint(float(t), 5.0) for t in range(5)))
    with caplog.at_level(logging.WARNING, logger="sample_space_entropy"):
        fit = fit_mono_exponential(series)
    assert fit.lambda_hat == pytest.approx(0.0, abs=1e-15)
    assert fit.s0_hat == pytest.approx(5.0, rel=1e-12)
    assert fit.r_squared_raw is None
    assert "no variance" in caplog.text


def test_shrinking_series() -> None:
    series = TimeSeries("0", tuple(SeriesPoint(float(t), 100.0 * math.exp(-0.2 * t)) for t in range(6)))
    fit = fit_mono_exponential(series)
    assert fit.lambda_hat == pytest.approx(-0.2, rel=1e-12)


def _series(s0: float, rate: float, noise: list[float], offset: float = 0.0) -> TimeSeries:
    return TimeSeries(
        "0",
        tuple(SeriesPoint(offset + t, s0 * math.exp(rate * t + epsilon)) for t, epsilon in enumerate(noise)),
    )


def _well_conditioned(rate: float, noise: list[float]) -> bool:
    # log values must vary well above rounding for R² to be comparable
    return max(abs(rate), *(abs(epsilon) for epsilon in noise)) > 1e-3


series_settings = settings(max_examples=100, deadline=None)
rates = st.floats(min_value=-0.5, max_value=0.5)
sizes = st.floats(min_value=0.1, max_value=100.0)
noise_lists = st.lists(st.floats(min_value=-0.05, max_value=0.05), min_size=3, max_size=20)


@series_settings
@given(s0=sizes, rate=rates, noise=noise_lists, scale=st.floats(min_value=1e-3, max_value=1e3))
def test_scale_equivariance(s0: float, rate: float, noise: list[float], scale: float) -> None:
    """Scaling every value scales s0_hat and leaves lambda_hat and R² unchanged."""
    assume(_well_conditioned(rate, noise))
    base = fit_mono_exponential(_series(s0, rate, noise))
    scaled = fit_mono_exponential(_series(s0 * scale, rate, noise))
    assert scaled.s0_hat == pytest.approx(base.s0_hat * scale, rel=1e-9)
    assert scaled.lambda_hat == pytest.approx(base.lambda_hat, rel=1e-9, abs=1e-12)
    assert scaled.r_squared == pytest.approx(base.r_squared, abs=1e-9)


@series_settings
@given(s0=sizes, rate=rates, noise=noise_lists, shift=st.floats(min_value=-50.0, max_value=50.0))
def test_time_shift_covariance(s0: float, rate: float, noise: list[float], shift: float) -> None:
    """Shifting every time by d keeps lambda_hat and moves s0_hat by exp(-lambda_hat * d)."""
    assume(_well_conditioned(rate, noise))
    base = fit_mono_exponential(_series(s0, rate, noise))
    shifted = fit_mono_exponential(_series(s0, rate, noise, offset=shift))
    assert shifted.lambda_hat == pytest.approx(base.lambda_hat, rel=1e-9, abs=1e-12)
    assert shifted.s0_hat == pytest.approx(base.s0_hat * math.exp(-base.lambda_hat * shift), rel=1e-9)
    assert shifted.r_squared == pytest.approx(base.r_squared, abs=1e-9)


@series_settings
@given(s0=sizes, rate=rates, count=st.integers(min_value=2, max_value=30))
def test_noiseless_recovery(s0: float, rate: float, count: int) -> None:
    fit = fit_mono_exponential(_series(s0, rate, [0.0] * count))
    assert fit.s0_hat == pytest.approx(s0, rel=1e-9)
    assert fit.lambda_hat == pytest.approx(rate, rel=1e-9, abs=1e-12)
