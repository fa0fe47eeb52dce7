"""Heatmap and histogram rendering.

Heatmaps are plain-text PGM (P2) images with one pixel per matrix cell:
white is distance 0 and darker pixels are larger distances. Histograms are
CSV bin tables with an optional SVG bar chart.
"""

import math
from collections.abc import Sequence
from xml.sax.saxutils import escape

import numpy as np
import structlog

from shared.schemas import DistanceMatrix
from versevar.errors import EmptyDatasetError, ParseError

logger = structlog.get_logger()

WHITE = 255

Bin = tuple[float, float, int]


def heatmap_pixels(matrix: DistanceMatrix) -> list[list[int]]:
    """Gray level of every cell, 255 * (1 - d / d_max) rounded half up."""
    d_max = max(max(row) for row in matrix.entries)
    if d_max == 0:
        return [[WHITE] * matrix.n for _ in range(matrix.n)]
    return [
        [(2 * WHITE * (d_max - d) + d_max) // (2 * d_max) for d in row]
        for row in matrix.entries
    ]


def heatmap_pgm(matrix: DistanceMatrix) -> str:
    """P2 image text, rows top to bottom."""
    pixels = heatmap_pixels(matrix)
    body = "".join(" ".join(str(p) for p in row) + "\n" for row in pixels)
    return f"P2\n{matrix.n} {matrix.n}\n{WHITE}\n{body}"


def parse_values(text: str, source: str = "values") -> list[float]:
    """One number per line; ``inf`` is accepted.

    Raises:
        ParseError: on a line that is not a number
        EmptyDatasetError: if there are no values
    """
    values = []
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        try:
            value = float(line)
        except ValueError:
            raise ParseError(f"{source}: {line!r} is not a number", line=number)
        if math.isnan(value):
            raise ParseError(f"{source}: nan is not a ratio", line=number)
        values.append(value)
    if not values:
        raise EmptyDatasetError()
    return values


def histogram(values: Sequence[float], n_bins: int) -> list[Bin]:
    """Equal-width bins over [min, max], the last bin closed on the right.

    Infinite values (zero-variance resamples) are counted in the last bin.
    A single distinct value yields one bin holding everything.

    Raises:
        EmptyDatasetError: if values is empty
    """
    if not values:
        raise EmptyDatasetError()
    if n_bins < 1:
        raise ValueError("n_bins must be positive")

    arr = np.asarray(values, dtype=np.float64)
    finite = arr[np.isfinite(arr)]
    n_inf = int(arr.size - finite.size)
    if finite.size == 0:
        return [(math.inf, math.inf, n_inf)]

    lo, hi = float(finite.min()), float(finite.max())
    if lo == hi:
        return [(lo, hi, int(arr.size))]

    counts, edges = np.histogram(finite, bins=n_bins, range=(lo, hi))
    counts[-1] += n_inf
    return [(float(edges[i]), float(edges[i + 1]), int(c)) for i, c in enumerate(counts)]


def histogram_csv(bins: Sequence[Bin]) -> str:
    rows = "".join(f"{left!r},{right!r},{count}\n" for left, right, count in bins)
    return "bin_left,bin_right,count\n" + rows


def histogram_svg(bins: Sequence[Bin], title: str = "", width: int = 600, height: int = 300) -> str:
    """Bar chart of histogram bins."""
    peak = max(count for _, _, count in bins) or 1
    bar = width / len(bins)
    bars = []
    for i, (left, right, count) in enumerate(bins):
        h = height * count / peak
        bars.append(
            f'<rect x="{i * bar:.2f}" y="{height - h:.2f}" width="{bar * 0.9:.2f}" '
            f'height="{h:.2f}" fill="gray"><title>[{left:.4g}, {right:.4g}]: {count}</title></rect>'
        )
    caption = f'<text x="4" y="14" font-size="12">{escape(title)}</text>' if title else ""
    return (
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">{caption}{"".join(bars)}</svg>\n'
    )
