"""Evaluation grids given as start:end:step."""

from __future__ import annotations

from dataclasses import dataclass
import math

from sample_space_entropy.const import DEFAULT_GRID_POINTS
from sample_space_entropy.exceptions import SampleSpaceEntropyValidationError
from sample_space_entropy.ingest.sanitizers import parse_number

# Fraction of a step within which the last point counts as landing on the end
_STEP_SLACK = 1e-9


@dataclass(frozen=True, slots=True)
class Grid:
    """
    Evenly spaced evaluation points from start to end.

    The last point is always exactly `end`, even when the step does not
    divide the span.
    """

    start: float
    end: float
    step: float

    def __post_init__(self) -> None:
        """Validate the grid bounds."""
        if not all(math.isfinite(value) for value in (self.start, self.end, self.step)):
            msg = f"grid bounds must be finite, got {self.start}:{self.end}:{self.step}"
            raise SampleSpaceEntropyValidationError(msg)
        if not self.start < self.end:
            msg = f"grid start must be < end, got {self.start}:{self.end}"
            raise SampleSpaceEntropyValidationError(msg)
        if not self.step > 0.0:
            msg = f"grid step must be > 0, got {self.step}"
            raise SampleSpaceEntropyValidationError(msg)

    @classmethod
    def parse(cls, text: str) -> Grid:
        """
        Parse `start:end:step`.

        Raises:
            SampleSpaceEntropyValidationError: If the text is malformed or the bounds are invalid.

        """
        parts = text.split(":")
        if len(parts) != 3:
            msg = f"grid must be start:end:step, got {text!r}"
            raise SampleSpaceEntropyValidationError(msg)
        try:
            start, end, step = (parse_number(part) for part in parts)
        except ValueError as err:
            msg = f"grid {text!r}: {err}"
            raise SampleSpaceEntropyValidationError(msg) from err
        return cls(start, end, step)

    @classmethod
    def spanning(cls, start: float, end: float, points: int = DEFAULT_GRID_POINTS) -> Grid:
        """Return a grid of `points` evenly spaced points over [start, end]."""
        return cls(start, end, (end - start) / (points - 1))

    def points(self) -> list[float]:
        """Return the grid points, ending exactly at `end`."""
        count = math.floor((self.end - self.start) / self.step + _STEP_SLACK)
        values = [self.start + index * self.step for index in range(count + 1)]
        if values[-1] < self.end - self.step * _STEP_SLACK:
            values.append(self.end)
        else:
            values[-1] = self.end
        return values

    def __str__(self) -> str:
        """Return the grid in start:end:step form."""
        return f"{self.start:g}:{self.end:g}:{self.step:g}"
