"""
Input sanitizers and normalizers.

Functions for turning the text of data and model files into numbers. Parsing
is strict: scientific notation is accepted, thousands separators, digit
group underscores, NaN and infinities are not.
"""

from __future__ import annotations

import re

_NUMBER = re.compile(r"[+-]?(?:\d+(?:\.\d*)?|\.\d+)(?:[eE][+-]?\d+)?")
_INTEGER = re.compile(r"[+-]?\d+")


def parse_number(text: str) -> float:
    """
    Parse decimal or scientific notation into the nearest binary float.

    Args:
        text: Raw cell or value text; surrounding whitespace is ignored.

    Returns:
        The parsed value.

    Raises:
        ValueError: If the text is empty, uses a thousands separator or is not a number.

    Example:
        >>> parse_number(" 7.5805 ")
        7.5805
        >>> parse_number("1e-3")
        0.001

    """
    stripped = text.strip()
    if not stripped:
        msg = "empty value"
        raise ValueError(msg)
    if "," in stripped:
        msg = f"thousands separators are not accepted: {stripped!r}"
        raise ValueError(msg)
    if not _NUMBER.fullmatch(stripped):
        msg = f"unparsable number {stripped!r}"
        raise ValueError(msg)
    return float(stripped)


def parse_integer(text: str) -> int:
    """
    Parse a plain integer.

    Raises:
        ValueError: If the text is not an integer literal.

    """
    stripped = text.strip()
    if not _INTEGER.fullmatch(stripped):
        msg = f"expected an integer, got {stripped!r}"
        raise ValueError(msg)
    return int(stripped)


def sanitize_column_name(name: str) -> str:
    """Normalize a CSV column name by trimming surrounding whitespace and a byte order mark."""
    return name.strip().lstrip("\ufeff").strip()


__all__ = [
    "parse_integer",
    "parse_number",
    "sanitize_column_name",
]
