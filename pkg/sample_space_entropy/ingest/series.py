"""
Time-series CSV ingestion.

A series file is UTF-8 comma-separated text with a header row; the time and
value columns are addressed by name and any other columns are ignored. Rows
may appear in any order. Times become offsets from the origin, which is
either the earliest time in the file or an explicit value.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import StrEnum
from pathlib import Path

import pandas as pd

from sample_space_entropy.const import LOGGER
from sample_space_entropy.data import SeriesPoint, TimeSeries
from sample_space_entropy.exceptions import SampleSpaceEntropyIngestError, SampleSpaceEntropyValidationError

from .sanitizers import parse_number, sanitize_column_name


class OriginPolicy(StrEnum):
    """How t = 0 is chosen for a loaded series."""

    FIRST_ROW = "first-row"
    EXPLICIT = "explicit"


@dataclass(frozen=True, slots=True)
class SeriesFileSpec:
    """
    Where a series lives and how to read it.

    Attributes:
        path: The CSV file.
        time_column: Header name of the time column.
        value_column: Header name of the value column.
        origin_policy: Use the earliest time as t = 0, or an explicit origin.
        origin: Origin text for the explicit policy, e.g. "2001".

    """

    path: Path
    time_column: str = "year"
    value_column: str = "value"
    origin_policy: OriginPolicy = OriginPolicy.FIRST_ROW
    origin: str | None = None

    def __post_init__(self) -> None:
        """Validate the column names and origin settings."""
        object.__setattr__(self, "path", Path(self.path))
        time_column = sanitize_column_name(self.time_column)
        value_column = sanitize_column_name(self.value_column)
        if not time_column or not value_column:
            msg = "column names must not be empty"
            raise SampleSpaceEntropyValidationError(msg)
        if time_column == value_column:
            msg = f"time and value columns must differ, both are {time_column!r}"
            raise SampleSpaceEntropyValidationError(msg)
        object.__setattr__(self, "time_column", time_column)
        object.__setattr__(self, "value_column", value_column)

        policy = OriginPolicy(self.origin_policy)
        object.__setattr__(self, "origin_policy", policy)
        if policy is OriginPolicy.EXPLICIT:
            if self.origin is None:
                msg = "an explicit origin policy needs an origin value"
                raise SampleSpaceEntropyValidationError(msg)
            try:
                parse_number(self.origin)
            except ValueError as err:
                msg = f"origin: {err}"
                raise SampleSpaceEntropyValidationError(msg) from err


def _read_frame(path: Path) -> pd.DataFrame:
    if not path.is_file():
        raise SampleSpaceEntropyIngestError(path, "file", "file not found")
    try:
        frame = pd.read_csv(
            path,
            dtype=str,
            keep_default_na=False,
            encoding="utf-8-sig",
            skip_blank_lines=False,
        )
    except pd.errors.EmptyDataError as err:
        raise SampleSpaceEntropyIngestError(path, "header", "file is empty") from err
    except (pd.errors.ParserError, UnicodeDecodeError) as err:
        raise SampleSpaceEntropyIngestError(path, "file", f"not readable as UTF-8 CSV ({err})") from err
    frame.columns = [sanitize_column_name(str(column)) for column in frame.columns]
    # index rows by file line, the header being line 1
    frame.index = pd.RangeIndex(2, len(frame) + 2)
    blank = frame.fillna("").map(str.strip).eq("").all(axis=1)
    if blank.any():
        LOGGER.debug("Skipping %d blank lines in %s", int(blank.sum()), path)
    return frame[~blank]


def load_series(spec: SeriesFileSpec) -> TimeSeries:
    """
    Load and validate a time series.

    Args:
        spec: File location, column names and origin policy.

    Returns:
        The series sorted by time, with times as offsets from the origin.

    Raises:
        SampleSpaceEntropyIngestError: For a missing file or column, an unparsable
            number, a duplicate time, a nonpositive value or fewer than 2 rows. The
            error names the file, the row or column, and the violated rule.

    """
    path = spec.path
    frame = _read_frame(path)
    for column in (spec.time_column, spec.value_column):
        if column not in frame.columns:
            header = ", ".join(frame.columns)
            raise SampleSpaceEntropyIngestError(path, f"column {column!r}", f"missing column (header has: {header})")

    rows: dict[float, tuple[str, float, int]] = {}
    for line, time_text, value_text in zip(
        frame.index, frame[spec.time_column], frame[spec.value_column], strict=True
    ):
        location = f"row {line}"
        # short rows come back as NaN rather than text
        time_text = time_text if isinstance(time_text, str) else ""
        value_text = value_text if isinstance(value_text, str) else ""
        try:
            t = parse_number(time_text)
        except ValueError as err:
            raise SampleSpaceEntropyIngestError(path, location, f"{spec.time_column}: {err}") from err
        try:
            value = parse_number(value_text)
        except ValueError as err:
            raise SampleSpaceEntropyIngestError(path, location, f"{spec.value_column}: {err}") from err
        if value <= 0.0:
            raise SampleSpaceEntropyIngestError(path, location, f"nonpositive value {value_text.strip()}")
        if t in rows:
            raise SampleSpaceEntropyIngestError(
                path, location, f"duplicate time {time_text.strip()} (first seen on row {rows[t][2]})"
            )
        rows[t] = (time_text.strip(), value, line)

    if len(rows) < 2:
        raise SampleSpaceEntropyIngestError(path, "rows", f"need at least 2 points, got {len(rows)}")

    ordered = sorted(rows.items())
    if spec.origin_policy is OriginPolicy.EXPLICIT and spec.origin is not None:
        origin = parse_number(spec.origin)
        origin_label = spec.origin.strip()
    else:
        origin, (origin_label, _, _) = ordered[0]

    try:
        series = TimeSeries(origin_label, tuple(SeriesPoint(t - origin, value) for t, (_, value, _) in ordered))
    except SampleSpaceEntropyValidationError as err:
        raise SampleSpaceEntropyIngestError(path, "series", str(err)) from err

    LOGGER.debug("Loaded %d points from %s (origin %s)", len(series), path, origin_label)
    return series
