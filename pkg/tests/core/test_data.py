"""Tests for the domain types."""

from __future__ import annotations

import logging
import math

import pytest

from sample_space_entropy.const import FOUR_COMPONENTS
from sample_space_entropy.data import (
    ExpComponent,
    FitResult,
    MonoExpModel,
    MultiExpModel,
    ProcessSet,
    SeriesPoint,
    TimeSeries,
)
from sample_space_entropy.exceptions import SampleSpaceEntropyValidationError

pytestmark = pytest.mark.unit


def test_multiexp_sorted_by_decreasing_rate() -> None:
    model = MultiExpModel.from_pairs(reversed(FOUR_COMPONENTS))
    assert model.rates == (1.0, 0.1, 0.01, 0.001)
    assert model.weights == (0.4, 0.3, 0.2, 0.1)
    assert model.slowest == ExpComponent(0.1, 0.001)
    assert len(model) == 4


@pytest.mark.parametrize(
    ("pairs", "message"),
    [
        ([(0.6, 1.0), (0.6, 0.1)], "weights sum"),
        ([(0.5, 0.9), (0.5, 0.1)], "largest rate constant must be 1"),
        ([(0.5, 1.0), (0.5, 1.0)], "distinct"),
        ([(1.2, 1.0), (-0.2, 0.1)], "weight must be > 0"),
        ([(0.5, 1.0), (0.5, 0.0)], "rate must be > 0"),
        ([(0.5, 1.0), (math.nan, 0.1)], "weight must be > 0"),
        ([], "at least one component"),
    ],
)
def test_multiexp_invariants(pairs: list[tuple[float, float]], message: str) -> None:
    with pytest.raises(SampleSpaceEntropyValidationError, match=message):
        MultiExpModel.from_pairs(pairs)


def test_multiexp_renormalizes_near_unit_weights(caplog: pytest.LogCaptureFixture) -> None:
    with caplog.at_level(logging.DEBUG, logger="sample_space_entropy"):
        model = MultiExpModel.from_pairs([(0.4 + 5e-10, 1.0), (0.3, 0.1), (0.2, 0.01), (0.1, 0.001)])
    assert math.fsum(model.weights) == pytest.approx(1.0, abs=1e-15)
    assert "Renormalizing" in caplog.text


def test_multiexp_exact_weights_untouched() -> None:
    model = MultiExpModel.from_pairs(FOUR_COMPONENTS)
    assert model.components == tuple(ExpComponent(*pair) for pair in FOUR_COMPONENTS)


def test_mono_model_invariants() -> None:
    assert MonoExpModel(7.5805, 0.0555).rate == 0.0555
    with pytest.raises(SampleSpaceEntropyValidationError, match="s0"):
        MonoExpModel(0.5, 0.1)
    with pytest.raises(SampleSpaceEntropyValidationError, match="lambda"):
        MonoExpModel(1.0, -0.1)


def test_process_set() -> None:
    processes = ProcessSet([0.1, 0.3])  # type: ignore[arg-type]
    assert processes.rates == (0.1, 0.3)
    assert len(processes) == 2
    with pytest.raises(SampleSpaceEntropyValidationError):
        ProcessSet(())
    with pytest.raises(SampleSpaceEntropyValidationError, match="process 2"):
        ProcessSet((0.1, 0.0))


def test_time_series_invariants() -> None:
    series = TimeSeries("2001", ((0, 1), (1, 2)))
    assert series.times == (0.0, 1.0)
    assert series.values == (1.0, 2.0)
    assert len(series) == 2
    with pytest.raises(SampleSpaceEntropyValidationError, match="need at least 2 points"):
        TimeSeries("2001", (SeriesPoint(0.0, 1.0),))
    with pytest.raises(SampleSpaceEntropyValidationError, match="strictly increasing"):
        TimeSeries("2001", ((1.0, 1.0), (0.0, 2.0)))
    with pytest.raises(SampleSpaceEntropyValidationError, match="nonpositive value"):
        TimeSeries("2001", ((0.0, 1.0), (1.0, 0.0)))


def test_fit_result() -> None:
    fit = FitResult(s0_hat=2.0, lambda_hat=math.log(2.0), r_squared=1.0)
    assert fit.model == MonoExpModel(2.0, math.log(2.0))
    assert [point.value for point in fit.fitted_values([0.0, 1.0, 2.0])] == pytest.approx([2.0, 4.0, 8.0])
    with pytest.raises(SampleSpaceEntropyValidationError):
        FitResult(s0_hat=1.0, lambda_hat=0.1, r_squared=1.5)
    with pytest.raises(SampleSpaceEntropyValidationError):
        FitResult(s0_hat=1.0, lambda_hat=-0.1, r_squared=0.5).model  # noqa: B018
