"""Utils package for sample_space_entropy."""

from .string_helpers import format_percent, format_report_number, format_table_number
from .validators import ensure_finite, ensure_nonnegative_time, ensure_positive

__all__ = [
    "ensure_finite",
    "ensure_nonnegative_time",
    "ensure_positive",
    "format_percent",
    "format_report_number",
    "format_table_number",
]
