"""Tab-separated data tables and plain-text reports."""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from typing import TextIO

from sample_space_entropy.utils import format_table_number


def format_table(header: Sequence[str], rows: Iterable[Sequence[float | None]]) -> str:
    """
    Render a header row and numeric rows as TSV with `\\n` line endings.

    Cells holding None print as n/a.

    Example:
        >>> format_table(["T", "H"], [(0.0, 0.0), (1.0, 1.0)])
        'T\\tH\\n0\\t0\\n1\\t1\\n'

    """
    lines = ["\t".join(header)]
    lines.extend("\t".join(format_table_number(value) for value in row) for row in rows)
    return "\n".join(lines) + "\n"


def write_table(out: TextIO, header: Sequence[str], rows: Iterable[Sequence[float | None]]) -> None:
    """Write a TSV table to a text stream."""
    out.write(format_table(header, rows))


def write_report(out: TextIO, items: Iterable[tuple[str, str]]) -> None:
    """Write `label: value` report lines."""
    items = list(items)
    width = max(len(label) for label, _ in items) + 1
    for label, value in items:
        out.write(f"{label + ':':<{width}} {value}\n")
