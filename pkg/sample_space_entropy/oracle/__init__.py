"""
Independent brute-force checks of the closed forms in core.

Package structure:
- partitions.py: Explicit enumeration of the doubling and halving constructions
- quadrature.py: Adaptive Simpson quadrature of the mean residence time integrals
"""

from __future__ import annotations

from .partitions import PartitionState, simulate_doubling, simulate_halving
from .quadrature import (
    MrtQuadrature,
    QuadratureResult,
    QuadratureSpec,
    integrate_adaptive_simpson,
    mrt_quadrature,
    mrt_quadrature_detail,
    truncation_point,
)

__all__ = [
    "MrtQuadrature",
    "PartitionState",
    "QuadratureResult",
    "QuadratureSpec",
    "integrate_adaptive_simpson",
    "mrt_quadrature",
    "mrt_quadrature_detail",
    "simulate_doubling",
    "simulate_halving",
    "truncation_point",
]
