"""Reports and renderings of versevar results."""

from .formatters import (
    format_decimal,
    format_fraction,
    format_perm_result,
    format_summary,
    perm_report,
    profile_report,
    ratio_report,
    summary_report,
)
from .render import heatmap_pgm, heatmap_pixels, histogram, histogram_csv, histogram_svg, parse_values

__all__ = [
    "format_decimal",
    "format_fraction",
    "format_summary",
    "format_perm_result",
    "summary_report",
    "ratio_report",
    "perm_report",
    "profile_report",
    "heatmap_pixels",
    "heatmap_pgm",
    "parse_values",
    "histogram",
    "histogram_csv",
    "histogram_svg",
]
