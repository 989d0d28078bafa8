"""
Exceptions raised by sample_space_entropy.

Every error derives from SampleSpaceEntropyError so callers, the command line
entry point in particular, can catch the whole family in one place.
"""

from __future__ import annotations

from collections.abc import Mapping
from pathlib import Path
from typing import Any


class SampleSpaceEntropyError(Exception):
    """Base exception for all sample_space_entropy errors."""


class SampleSpaceEntropyDomainError(SampleSpaceEntropyError, ValueError):
    """Exception to indicate an argument outside an operation's domain."""


class SampleSpaceEntropyValidationError(SampleSpaceEntropyError, ValueError):
    """Exception to indicate a violated model or series invariant."""


class SampleSpaceEntropyNumericalError(SampleSpaceEntropyError, ArithmeticError):
    """
    Exception to indicate a numerical procedure did not converge.

    Attributes:
        diagnostics: State of the procedure when it gave up.

    """

    def __init__(self, msg: str, diagnostics: Mapping[str, Any] | None = None) -> None:
        """Initialize with a message and optional diagnostics."""
        super().__init__(msg)
        self.diagnostics: dict[str, Any] = dict(diagnostics or {})


class SampleSpaceEntropyResourceError(SampleSpaceEntropyError):
    """Exception to indicate a request exceeds an enumeration bound."""


class SampleSpaceEntropyIngestError(SampleSpaceEntropyValidationError):
    """
    Exception to indicate an input file could not be turned into a domain type.

    Attributes:
        path: The offending file.
        location: Row number or field name within the file.
        rule: The rule that was violated.

    """

    def __init__(self, path: Path | str, location: str, rule: str) -> None:
        """Initialize with the file, the location within it and the violated rule."""
        self.path = Path(path)
        self.location = location
        self.rule = rule
        super().__init__(f"{self.path}: {location}: {rule}")


__all__ = [
    "SampleSpaceEntropyDomainError",
    "SampleSpaceEntropyError",
    "SampleSpaceEntropyIngestError",
    "SampleSpaceEntropyNumericalError",
    "SampleSpaceEntropyResourceError",
    "SampleSpaceEntropyValidationError",
]
