"""Tests for the partition enumeration oracles."""

from __future__ import annotations

import math

import pytest

from sample_space_entropy.core import contraction_probability, entropy_from_probability
from sample_space_entropy.data import ContractionModel
from sample_space_entropy.exceptions import (
    SampleSpaceEntropyDomainError,
    SampleSpaceEntropyResourceError,
    SampleSpaceEntropyValidationError,
)
from sample_space_entropy.oracle import PartitionState, simulate_doubling, simulate_halving

pytestmark = pytest.mark.unit


@pytest.mark.parametrize("n", range(21))
def test_doubling_matches_closed_form(n: int) -> None:
    state = simulate_doubling(n)
    assert state.partition_count == 2**n
    assert state.cumulative_probability == pytest.approx(0.5**n, abs=1e-9)
    assert state.entropy == pytest.approx(n * math.log(2.0), abs=1e-9)
    assert entropy_from_probability(state.cumulative_probability) == pytest.approx(state.entropy, abs=1e-9)


def test_two_doublings() -> None:
    """Two doublings leave four partitions of probability 1/4."""
    state = simulate_doubling(2)
    assert state == PartitionState(n=2, partition_count=4, cumulative_probability=0.25, entropy=state.entropy)
    assert state.entropy == pytest.approx(1.386294, abs=1e-6)


def test_no_doubling() -> None:
    state = simulate_doubling(0)
    assert state.cumulative_probability == 1.0
    assert state.entropy == 0.0


def test_doubling_bounds() -> None:
    with pytest.raises(SampleSpaceEntropyResourceError, match="enumeration bound"):
        simulate_doubling(21)
    with pytest.raises(SampleSpaceEntropyDomainError):
        simulate_doubling(-1)
    with pytest.raises(SampleSpaceEntropyDomainError, match="integer"):
        simulate_doubling(1.5)  # type: ignore[arg-type]


def test_partition_state_invariants() -> None:
    with pytest.raises(SampleSpaceEntropyValidationError):
        PartitionState(n=2, partition_count=3, cumulative_probability=1 / 3, entropy=1.0)
    with pytest.raises(SampleSpaceEntropyValidationError):
        PartitionState(n=1, partition_count=2, cumulative_probability=0.4, entropy=1.0)


@pytest.mark.parametrize(("s0", "n", "probability"), [(1000, 3, 0.008), (1024, 10, 1.0), (1000, 0, 0.001)])
def test_halving_enumerated(s0: int, n: int, probability: float) -> None:
    assert simulate_halving(s0, n) == pytest.approx(probability, rel=1e-15)


def test_halving_uneven_split_uses_continuous_value() -> None:
    assert simulate_halving(1000, 4) == pytest.approx(16 / 1000, rel=1e-15)


@pytest.mark.parametrize("n", range(10))
def test_halving_matches_closed_form(n: int) -> None:
    model = ContractionModel(1000)
    assert simulate_halving(1000, n) == pytest.approx(contraction_probability(model, float(n)), rel=1e-12)


def test_halving_bounds() -> None:
    with pytest.raises(SampleSpaceEntropyDomainError, match="violated"):
        simulate_halving(1000, 10)
    with pytest.raises(SampleSpaceEntropyValidationError):
        simulate_halving(1, 0)
    with pytest.raises(SampleSpaceEntropyResourceError):
        simulate_halving(2**30, 21)
