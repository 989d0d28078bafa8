"""
Mono-exponential fitting of observed time series.

Package structure:
- regression.py: Log-linear least squares fit and goodness of fit
- derived.py: Growth rate, doubling time, and the entropy and probability time courses
"""

from __future__ import annotations

from .derived import annual_growth_rate, doubling_time, entropy_series, probability_series
from .regression import fit_mono_exponential

__all__ = [
    "annual_growth_rate",
    "doubling_time",
    "entropy_series",
    "fit_mono_exponential",
    "probability_series",
]
