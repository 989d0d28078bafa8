"""Number formatting helpers for sample_space_entropy output."""

from __future__ import annotations

from sample_space_entropy.const import REPORT_DECIMALS, TABLE_DIGITS


def format_table_number(value: float | None, digits: int = TABLE_DIGITS) -> str:
    """
    Format a value for a data table with a fixed number of significant digits.

    None marks a value undefined at that row and prints as n/a.

    Example:
        >>> format_table_number(0.36787944117144233)
        '0.367879441'

    """
    if value is None:
        return "n/a"
    return f"{value:.{digits}g}"


def format_report_number(value: float, decimals: int = REPORT_DECIMALS) -> str:
    """
    Format a value for a human-readable report.

    Example:
        >>> format_report_number(0.0555)
        '0.055500'

    """
    return f"{value:.{decimals}f}"


def format_percent(fraction: float, decimals: int = 2) -> str:
    """
    Format a fraction as a percentage.

    Example:
        >>> format_percent(0.05707)
        '5.71%'

    """
    return f"{fraction * 100.0:.{decimals}f}%"
