"""Shared fixtures for sample_space_entropy tests."""

from __future__ import annotations

from collections.abc import Callable
import math
from pathlib import Path

import numpy as np
import pytest

from sample_space_entropy.const import (
    BROAD_MONEY_LAMBDA,
    BROAD_MONEY_ORIGIN,
    BROAD_MONEY_S0,
    BROAD_MONEY_YEARS,
    FOUR_COMPONENTS,
)
from sample_space_entropy.data import MultiExpModel, SeriesPoint, TimeSeries

CONFIG_DIR = Path(__file__).parent.parent / "config"

# Frozen seed for the noisy broad money fixture
NOISE_SEED = 20190101
NOISE_AMPLITUDE = 0.02


def broad_money_values(noise: np.ndarray | None = None) -> list[float]:
    """Return s0 * exp(lambda * t) for t = 0..18, optionally scaled by exp(epsilon) noise."""
    values = [BROAD_MONEY_S0 * math.exp(BROAD_MONEY_LAMBDA * t) for t in range(BROAD_MONEY_YEARS + 1)]
    if noise is None:
        return values
    return [value * math.exp(float(epsilon)) for value, epsilon in zip(values, noise, strict=True)]


@pytest.fixture
def config_dir() -> Path:
    """Return the directory of the shipped model files."""
    return CONFIG_DIR


@pytest.fixture
def four_component_model() -> MultiExpModel:
    """Return the four-component multi-exponential model."""
    return MultiExpModel.from_pairs(FOUR_COMPONENTS)


@pytest.fixture
def broad_money_noiseless() -> TimeSeries:
    """Return 19 yearly points generated from s0 = 7.5805 and lambda = 0.0555."""
    points = tuple(SeriesPoint(float(t), value) for t, value in enumerate(broad_money_values()))
    return TimeSeries(BROAD_MONEY_ORIGIN, points)


@pytest.fixture
def broad_money_noisy() -> TimeSeries:
    """Return the noiseless series times exp(epsilon), epsilon uniform in +-0.02 from a fixed seed."""
    rng = np.random.default_rng(NOISE_SEED)
    noise = rng.uniform(-NOISE_AMPLITUDE, NOISE_AMPLITUDE, BROAD_MONEY_YEARS + 1)
    points = tuple(SeriesPoint(float(t), value) for t, value in enumerate(broad_money_values(noise)))
    return TimeSeries(BROAD_MONEY_ORIGIN, points)


@pytest.fixture
def write_file(tmp_path: Path) -> Callable[[str, str], Path]:
    """Return a helper writing text to a file under tmp_path."""

    def _write(name: str, text: str) -> Path:
        path = tmp_path / name
        path.write_text(text, encoding="utf-8")
        return path

    return _write


@pytest.fixture
def broad_money_csv(write_file: Callable[[str, str], Path]) -> Path:
    """Return a year,value CSV of the noiseless broad money series, 2001 to 2019."""
    first_year = int(BROAD_MONEY_ORIGIN)
    rows = [f"{first_year + t},{value!r}" for t, value in enumerate(broad_money_values())]
    return write_file("broad_money.csv", "year,value\n" + "\n".join(rows) + "\n")
