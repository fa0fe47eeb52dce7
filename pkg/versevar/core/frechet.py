"""Generalized (Frechet) mean and variance over attested items.

The candidate set is the sample itself: each row's objective is the sum of
powered distances to every observation, the minimizing rows are the mean
and the minimum divided by the number of observations is the variance.
All objectives are exact integers.
"""

from collections import Counter
from collections.abc import Sequence
from fractions import Fraction

import numpy as np
import structlog

from shared.schemas import CountTable, DistanceMatrix, FrechetSummary, Weighting
from versevar.errors import AlignmentError, DegenerateSampleError, EmptyDatasetError

logger = structlog.get_logger()

_INT64_MAX = np.iinfo(np.int64).max


def _safe_dtype(max_term: int, width: int) -> np.dtype | type[object]:
    """int64 when a row sum of ``width`` terms of at most ``max_term`` fits, else object."""
    if max_term * max(width, 1) <= _INT64_MAX:
        return np.dtype(np.int64)
    return object


def row_objectives(entries: np.ndarray, power: int = 2) -> np.ndarray:
    """Sum of powered distances for every row of a square block."""
    n = entries.shape[0]
    max_d = int(entries.max()) if entries.size else 0
    dtype = _safe_dtype(max_d**power, n)
    return (entries.astype(dtype) ** power).sum(axis=1)


def weighted_objectives(
    entries: np.ndarray,
    counts: np.ndarray,
    power: int = 2,
    weighting: Weighting = Weighting.PAPER_DC_SQUARED,
) -> np.ndarray:
    """Row objectives of a distance block weighted by per-column counts."""
    k = entries.shape[0]
    max_d = int(entries.max()) if entries.size else 0
    max_c = int(counts.max()) if counts.size else 0
    if weighting == Weighting.PAPER_DC_SQUARED:
        dtype = _safe_dtype((max_c * max_d) ** power, k)
        scaled = entries.astype(dtype) * counts.astype(dtype)[np.newaxis, :]
        return (scaled**power).sum(axis=1)
    dtype = _safe_dtype(max_c * max_d**power, k)
    return ((entries.astype(dtype) ** power) * counts.astype(dtype)[np.newaxis, :]).sum(axis=1)


def _summarize(
    objectives: np.ndarray,
    denominator: int,
    power: int,
    items: Sequence[str] | None,
) -> FrechetSummary:
    best = min(int(v) for v in objectives)
    indices = [i for i, v in enumerate(objectives) if int(v) == best]
    return FrechetSummary(
        mean_indices=indices,
        mean_items=[items[i] for i in indices] if items is not None else [],
        variance_numerator=best,
        variance_denominator=denominator,
        power=power,
        label="median" if power == 1 else "mean",
    )


def frechet_summary(
    matrix: DistanceMatrix,
    n: int | None = None,
    power: int = 2,
) -> FrechetSummary:
    """Generalized mean and variance of the items behind a distance matrix.

    Args:
        matrix: Pairwise distances of the sample
        n: Number of observations (defaults to, and must equal, matrix.n)
        power: Exponent applied to distances; 1 gives the generalized median

    Returns:
        Summary listing every minimizing row

    Raises:
        AlignmentError: if n differs from the matrix size
    """
    if n is None:
        n = matrix.n
    if n != matrix.n:
        raise AlignmentError(f"n={n} but the matrix has {matrix.n} rows")
    if power < 1:
        raise ValueError("power must be a positive integer")

    objectives = row_objectives(matrix.as_array(), power)
    summary = _summarize(objectives, n, power, matrix.labels)
    logger.debug(
        "frechet_summary",
        n=n,
        power=power,
        variance=summary.variance_text,
        means=summary.mean_indices,
    )
    return summary


def weighted_frechet(
    matrix: DistanceMatrix,
    counts: CountTable,
    n_lines: int | None = None,
    power: int = 2,
    weighting: Weighting = Weighting.PAPER_DC_SQUARED,
) -> FrechetSummary:
    """Generalized mean and variance from distinct items and their counts.

    With the default weighting the row objective is sum_j (c_j * d_ij)^p,
    the row sums of the distance matrix times the diagonal count matrix.

    Args:
        matrix: Distances between the k distinct items
        counts: Count table whose rows follow the matrix rows
        n_lines: Number of observations (defaults to, and must equal, counts.total)
        power: Exponent applied to each term
        weighting: Objective form

    Raises:
        AlignmentError: if counts and matrix disagree in length or labels,
            or n_lines differs from the count total
    """
    if len(counts.rows) != matrix.n:
        raise AlignmentError(f"{len(counts.rows)} counts for a {matrix.n}-row matrix")
    if matrix.labels is not None and list(matrix.labels) != counts.patterns:
        raise AlignmentError("count table patterns do not follow the matrix rows")
    if n_lines is None:
        n_lines = counts.total
    if n_lines != counts.total:
        raise AlignmentError(f"n_lines={n_lines} but the counts total {counts.total}")

    objectives = weighted_objectives(
        matrix.as_array(), np.array(counts.counts, dtype=np.int64), power, weighting
    )
    summary = _summarize(objectives, n_lines, power, counts.patterns)
    logger.debug(
        "weighted_frechet",
        n_lines=n_lines,
        weighting=weighting.value,
        variance=summary.variance_text,
        means=summary.mean_items,
    )
    return summary


def variance_ratio(numerator: FrechetSummary, denominator: FrechetSummary) -> Fraction:
    """Ratio of two generalized variances, computed exactly.

    Raises:
        DegenerateSampleError: if the denominator variance is zero
    """
    if denominator.variance_numerator == 0:
        raise DegenerateSampleError()
    return numerator.variance / denominator.variance


def tabulate(items: Sequence[str]) -> CountTable:
    """Count table of the distinct items in first-seen order."""
    if not items:
        raise EmptyDatasetError()
    counts = Counter(items)
    return CountTable.from_pairs([(item, counts[item]) for item in dict.fromkeys(items)])
