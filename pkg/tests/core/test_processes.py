"""Tests for simultaneous independent processes."""

from __future__ import annotations

import math

from hypothesis import given, settings, strategies as st
import pytest

from sample_space_entropy.const import EXAMPLE_PROCESS_RATES
from sample_space_entropy.core import combine_processes, decompose_processes, entropy_mono, probability_mono
from sample_space_entropy.data import ProcessSet
from sample_space_entropy.exceptions import SampleSpaceEntropyDomainError

pytestmark = pytest.mark.unit


def _check_laws(processes: ProcessSet, t: float) -> None:
    combined = combine_processes(processes)
    parts = decompose_processes(processes, t)
    assert len(parts) == len(processes)
    assert math.prod(part.probability for part in parts) == pytest.approx(
        probability_mono(combined * t), rel=1e-12, abs=1e-300
    )
    assert math.fsum(part.entropy for part in parts) == pytest.approx(entropy_mono(combined * t), rel=1e-12)


def test_combined_rate() -> None:
    assert combine_processes(ProcessSet(EXAMPLE_PROCESS_RATES)) == pytest.approx(1.0, rel=1e-15)
    assert combine_processes(ProcessSet((0.25,))) == 0.25


@pytest.mark.parametrize("t", [0.0, 0.5, 1.0, 3.0, 10.0])
def test_example_processes(t: float) -> None:
    """Probabilities multiply and entropies add to the combined process."""
    _check_laws(ProcessSet(EXAMPLE_PROCESS_RATES), t)


def test_decompose_at_zero() -> None:
    parts = decompose_processes(ProcessSet(EXAMPLE_PROCESS_RATES), 0.0)
    assert all(part.probability == 1.0 and part.entropy == 0.0 for part in parts)


def test_decompose_negative_time() -> None:
    with pytest.raises(SampleSpaceEntropyDomainError):
        decompose_processes(ProcessSet(EXAMPLE_PROCESS_RATES), -1.0)


@settings(max_examples=100, deadline=None)
@given(
    rates=st.lists(st.floats(min_value=1e-3, max_value=10.0), min_size=1, max_size=8),
    t=st.floats(min_value=0.0, max_value=50.0),
)
def test_independent_process_laws(rates: list[float], t: float) -> None:
    _check_laws(ProcessSet(tuple(rates)), t)
