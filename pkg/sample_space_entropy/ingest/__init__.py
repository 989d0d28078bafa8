"""
Reading model files and time-series CSV files into validated domain types.

Package structure:
- sanitizers.py: Strict number parsing and column name normalization
- schemas.py: Voluptuous schemas and variant selection for model files
- models.py: Model file parsing, loading and serialization
- series.py: Time-series CSV loading
"""

from __future__ import annotations

from .models import ModelConfig, dump_model, load_model, parse_model, save_model
from .schemas import ModelVariant
from .series import OriginPolicy, SeriesFileSpec, load_series

__all__ = [
    "ModelConfig",
    "ModelVariant",
    "OriginPolicy",
    "SeriesFileSpec",
    "dump_model",
    "load_model",
    "load_series",
    "parse_model",
    "save_model",
]
