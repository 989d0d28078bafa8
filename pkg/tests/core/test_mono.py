"""Tests for mono-exponential probability and entropy."""

from __future__ import annotations

import logging
import math

from hypothesis import given, settings, strategies as st
import pytest

from sample_space_entropy.core import (
    entropy_from_probability,
    entropy_mono,
    probability_mono,
    sample_space_size,
    scaled_time,
)
from sample_space_entropy.data import MonoExpModel
from sample_space_entropy.exceptions import SampleSpaceEntropyDomainError

pytestmark = pytest.mark.unit


def test_reference_state() -> None:
    """At T = 0 the outcome is certain and carries no entropy."""
    assert probability_mono(0.0) == 1.0
    assert entropy_mono(0.0) == 0.0


@pytest.mark.parametrize(
    ("scaled", "probability"),
    [(1.0, 0.36787944117144233), (math.log(2.0), 0.5), (10.0, 4.5399929762484854e-05)],
)
def test_probability_mono(scaled: float, probability: float) -> None:
    assert probability_mono(scaled) == pytest.approx(probability, rel=1e-15)


def test_time_scaling_identity() -> None:
    """H(T) = T and p(T) = e^-T on a 0..100 grid."""
    for index in range(1001):
        scaled = index / 10.0
        assert abs(entropy_mono(scaled) - scaled) <= 1e-12
        assert probability_mono(scaled) == pytest.approx(math.exp(-scaled), rel=1e-15)


def test_underflow_reports_zero() -> None:
    assert probability_mono(800.0) == 0.0
    assert entropy_mono(800.0) == 800.0


@pytest.mark.parametrize("scaled", [-1.0, -1e-300, math.nan, math.inf, 1e6 + 1.0])
def test_invalid_scaled_time(scaled: float) -> None:
    with pytest.raises(SampleSpaceEntropyDomainError):
        probability_mono(scaled)
    with pytest.raises(SampleSpaceEntropyDomainError):
        entropy_mono(scaled)


def test_scaled_time() -> None:
    assert scaled_time(0.0555, 18.0) == pytest.approx(0.999, abs=1e-12)
    assert scaled_time(2.0, 0.0) == 0.0
    with pytest.raises(SampleSpaceEntropyDomainError, match="t must be >= 0"):
        scaled_time(1.0, -1.0)


def test_entropy_from_probability() -> None:
    assert entropy_from_probability(1.0) == 0.0
    assert entropy_from_probability(0.25) == pytest.approx(2.0 * math.log(2.0), rel=1e-15)
    for probability in (0.0, -0.5, 1.5, math.nan):
        with pytest.raises(SampleSpaceEntropyDomainError):
            entropy_from_probability(probability)


def test_sample_space_size() -> None:
    """Three doublings multiply the sample space by eight."""
    model = MonoExpModel(1.0, math.log(2.0))
    assert sample_space_size(model, 3.0) == pytest.approx(8.0, rel=1e-12)
    assert sample_space_size(MonoExpModel(7.5805, 0.0555), 0.0) == 7.5805


def test_sample_space_size_overflow(caplog: pytest.LogCaptureFixture) -> None:
    with caplog.at_level(logging.WARNING, logger="sample_space_entropy"):
        assert sample_space_size(MonoExpModel(1.0, 1.0), 1000.0) == math.inf
    assert "overflows" in caplog.text


@settings(max_examples=200, deadline=None)
@given(scaled=st.floats(min_value=0.0, max_value=700.0))
def test_entropy_is_negative_log_probability(scaled: float) -> None:
    entropy = entropy_from_probability(probability_mono(scaled))
    assert entropy == pytest.approx(entropy_mono(scaled), rel=1e-12, abs=1e-12)
