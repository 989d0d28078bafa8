"""
Probability and information entropy of exponentially evolving sample spaces.

A sample space whose size grows as s0 * exp(lambda * t) makes the probability
of one determined outcome decay as exp(-lambda * t) and its information
entropy grow as lambda * t nats. This package evaluates that relationship for
mono-exponential, multi-process, multi-exponential and contracting sample
spaces, checks the closed forms by brute force, and fits the rate constant of
observed time series.

Package structure:
- core/: Closed-form probability, entropy, MRT and contraction
- oracle/: Partition enumeration and quadrature cross-checks
- fitting/: Log-linear regression of time series
- ingest/: Model files and CSV series
- cli/: The `sample-space-entropy` command
"""

from __future__ import annotations

from .const import VERSION
from .data import (
    ContractionModel,
    ExpComponent,
    FitResult,
    MonoExpModel,
    MultiExpModel,
    ProcessSet,
    SeriesPoint,
    TimeSeries,
)
from .exceptions import (
    SampleSpaceEntropyDomainError,
    SampleSpaceEntropyError,
    SampleSpaceEntropyIngestError,
    SampleSpaceEntropyNumericalError,
    SampleSpaceEntropyResourceError,
    SampleSpaceEntropyValidationError,
)

__version__ = VERSION

__all__ = [
    "ContractionModel",
    "ExpComponent",
    "FitResult",
    "MonoExpModel",
    "MultiExpModel",
    "ProcessSet",
    "SampleSpaceEntropyDomainError",
    "SampleSpaceEntropyError",
    "SampleSpaceEntropyIngestError",
    "SampleSpaceEntropyNumericalError",
    "SampleSpaceEntropyResourceError",
    "SampleSpaceEntropyValidationError",
    "SeriesPoint",
    "TimeSeries",
    "__version__",
]
