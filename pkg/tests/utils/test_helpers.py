"""Tests for validators and formatting helpers."""

from __future__ import annotations

import math

import pytest

from sample_space_entropy.exceptions import SampleSpaceEntropyDomainError
from sample_space_entropy.utils import (
    ensure_finite,
    ensure_nonnegative_time,
    ensure_positive,
    format_percent,
    format_report_number,
    format_table_number,
)

pytestmark = pytest.mark.unit


def test_ensure_finite() -> None:
    assert ensure_finite(2, "x") == 2.0
    with pytest.raises(SampleSpaceEntropyDomainError, match="x must be finite"):
        ensure_finite(math.inf, "x")


def test_ensure_nonnegative_time() -> None:
    assert ensure_nonnegative_time(0.0) == 0.0
    assert ensure_nonnegative_time(1e6) == 1e6
    assert ensure_nonnegative_time(1e9, "t", ceiling=None) == 1e9
    with pytest.raises(SampleSpaceEntropyDomainError, match="T must be <= 1e"):
        ensure_nonnegative_time(2e6)
    with pytest.raises(SampleSpaceEntropyDomainError, match="t must be >= 0"):
        ensure_nonnegative_time(-1.0, "t")


def test_ensure_positive() -> None:
    assert ensure_positive(0.5, "lambda") == 0.5
    with pytest.raises(SampleSpaceEntropyDomainError, match="lambda must be > 0"):
        ensure_positive(0.0, "lambda")


def test_formatting() -> None:
    assert format_table_number(math.exp(-1.0)) == "0.367879441"
    assert format_table_number(1.0) == "1"
    assert format_table_number(None) == "n/a"
    assert format_report_number(0.0555) == "0.055500"
    assert format_report_number(826.8265802269) == "826.826580"
    assert format_percent(math.expm1(0.0555)) == "5.71%"
