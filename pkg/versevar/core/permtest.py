"""Permutation tests for the ratio of two generalized variances.

Resample ``i`` draws from its own PCG64 stream seeded by
``SeedSequence(seed, spawn_key=(i,))``, so a run is reproducible from
(inputs, seed, n_resamples) whatever the worker count or execution order.
Ratios are always the second sample's variance over the first's.
"""

import math
from collections.abc import Callable, Sequence
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from functools import partial
from typing import Any, TypeVar

import numpy as np
import structlog

from shared.schemas import (
    CountTable,
    DistanceMatrix,
    PermTestResult,
    Tail,
    Weighting,
    union_patterns,
)
from versevar.errors import AlignmentError, EmptyDatasetError

from .frechet import frechet_summary, row_objectives, weighted_frechet, weighted_objectives
from .metric import SymbolSequence, distance_matrix

logger = structlog.get_logger()

T = TypeVar("T")

# Exact ratio, or math.inf when only the denominator variance is zero
Ratio = Fraction | float

MAX_SEED = 2**64


def resample_generator(seed: int, index: int) -> np.random.Generator:
    """Independent PCG64 stream for one resample."""
    if not 0 <= seed < MAX_SEED:
        raise ValueError(f"seed must be an unsigned 64-bit integer, got {seed}")
    return np.random.Generator(np.random.PCG64(np.random.SeedSequence(seed, spawn_key=(index,))))


def permute_split(
    items: Sequence[T] | np.ndarray,
    sizes: tuple[int, int],
    rng: np.random.Generator,
) -> tuple[Any, Any]:
    """Uniformly shuffle ``items`` and cut the result at ``sizes[0]``.

    Lists come back as lists, numpy arrays as arrays.

    Raises:
        AlignmentError: if the sizes do not add up to len(items)
    """
    n1, n2 = sizes
    if n1 < 0 or n2 < 0 or n1 + n2 != len(items):
        raise AlignmentError(f"cannot split {len(items)} items into sizes {sizes}")

    order = rng.permutation(len(items))
    if isinstance(items, np.ndarray):
        shuffled = items[order]
        return shuffled[:n1], shuffled[n1:]
    shuffled_list = [items[int(i)] for i in order]
    return shuffled_list[:n1], shuffled_list[n1:]


def _ratio(objective_b: int, n_b: int, objective_a: int, n_a: int) -> Ratio:
    """(objective_b / n_b) / (objective_a / n_a), with degenerate cases mapped.

    Zero denominator variance gives +inf, zero numerator variance gives 0,
    and both zero give 1.
    """
    if objective_a == 0:
        return Fraction(1) if objective_b == 0 else math.inf
    return Fraction(objective_b * n_a, n_b * objective_a)


def _reciprocal(value: Ratio) -> Ratio:
    if value == 0:
        return math.inf
    if math.isinf(value):
        return Fraction(0)
    return 1 / Fraction(value)


def _exact(value: Ratio | float) -> Ratio:
    if isinstance(value, Fraction) or math.isinf(value):
        return value
    return Fraction(value)


def empirical_p(
    observed: Ratio | float,
    resamples: Sequence[Ratio | float],
    tail: Tail,
    corrected: bool = False,
) -> float:
    """Proportion of resampled ratios at least as extreme as the observed one.

    Two-tailed: r qualifies when r >= max(obs, 1/obs) or r <= min(obs, 1/obs).
    One-sided: r qualifies when r >= obs. Comparisons are inclusive.

    Args:
        observed: Observed ratio
        resamples: Resampled ratios
        tail: Qualifying rule
        corrected: Report (b + 1) / (n + 1) instead of b / n

    Raises:
        EmptyDatasetError: if there are no resamples
    """
    if not resamples:
        raise EmptyDatasetError("no resamples")

    obs = _exact(observed)
    values = [_exact(r) for r in resamples]
    if tail == Tail.TWO_TAILED_RECIPROCAL:
        inv = _reciprocal(obs)
        hi, lo = max(obs, inv), min(obs, inv)
        qualifying = sum(1 for r in values if r >= hi or r <= lo)
    else:
        qualifying = sum(1 for r in values if r >= obs)

    if corrected:
        return (qualifying + 1) / (len(values) + 1)
    return qualifying / len(values)


def _run(task: Callable[[int], Ratio], n_resamples: int, workers: int) -> list[Ratio]:
    """Evaluate every resample index, keeping results in index order."""
    if workers > 1 and n_resamples > 1:
        chunksize = max(1, n_resamples // (workers * 4))
        with ProcessPoolExecutor(max_workers=workers) as pool:
            return list(pool.map(task, range(n_resamples), chunksize=chunksize))
    return [task(i) for i in range(n_resamples)]


def _line_resample(
    index: int, seed: int, distances: np.ndarray, n_a: int, power: int
) -> Ratio:
    n = distances.shape[0]
    rng = resample_generator(seed, index)
    part_a, part_b = permute_split(list(range(n)), (n_a, n - n_a), rng)
    if __debug__:
        assert sorted(part_a + part_b) == list(range(n)), "resample lost lines"
    obj_a = int(row_objectives(distances[np.ix_(part_a, part_a)], power).min())
    obj_b = int(row_objectives(distances[np.ix_(part_b, part_b)], power).min())
    return _ratio(obj_b, n - n_a, obj_a, n_a)


def _counts_resample(
    index: int,
    seed: int,
    labels: np.ndarray,
    combined: np.ndarray,
    distances: np.ndarray,
    n_a: int,
    power: int,
    weighting: Weighting,
) -> Ratio:
    k = combined.shape[0]
    n_b = labels.shape[0] - n_a
    rng = resample_generator(seed, index)
    part_a, _ = permute_split(labels, (n_a, n_b), rng)
    counts_a = np.bincount(part_a, minlength=k)
    counts_b = combined - counts_a
    if __debug__:
        assert counts_b.min() >= 0 and int(counts_b.sum()) == n_b, "resample lost labels"
    obj_a = int(weighted_objectives(distances, counts_a, power, weighting).min())
    obj_b = int(weighted_objectives(distances, counts_b, power, weighting).min())
    return _ratio(obj_b, n_b, obj_a, n_a)


def _fraction_text(value: Ratio) -> str | None:
    if isinstance(value, Fraction):
        return f"{value.numerator}/{value.denominator}"
    return None


def _result(
    observed: Ratio,
    ratios: list[Ratio],
    tail: Tail,
    seed: int,
    power: int,
    corrected: bool,
) -> PermTestResult:
    return PermTestResult(
        observed_ratio=float(observed),
        observed_exact=_fraction_text(observed),
        resample_ratios=[float(r) for r in ratios],
        p_value=empirical_p(observed, ratios, tail, corrected),
        tail=tail,
        seed=seed,
        n_resamples=len(ratios),
        power=power,
        corrected=corrected,
    )


def line_permutation_test(
    lines_a: Sequence[SymbolSequence],
    lines_b: Sequence[SymbolSequence],
    n_resamples: int,
    seed: int,
    power: int = 2,
    tail: Tail = Tail.TWO_TAILED_RECIPROCAL,
    corrected: bool = False,
    workers: int = 1,
) -> PermTestResult:
    """Test equal variability of two collections of coded lines.

    The pooled lines are shuffled and split back into samples of the
    original sizes; each resample's variances are recomputed from the
    pooled distance matrix, which holds every pairwise distance needed.

    Args:
        lines_a: First sample (ratio denominator)
        lines_b: Second sample (ratio numerator)
        n_resamples: Number of shuffles
        seed: Unsigned 64-bit master seed
        power: Exponent applied to distances
        tail: Qualifying rule for the p-value
        corrected: Use the (b+1)/(n+1) p-value
        workers: Process pool size

    Raises:
        EmptyDatasetError: if either sample is empty
    """
    if not lines_a or not lines_b:
        raise EmptyDatasetError()
    if n_resamples < 1:
        raise ValueError("n_resamples must be positive")
    resample_generator(seed, 0)

    n_a, n_b = len(lines_a), len(lines_b)
    pooled = distance_matrix([*lines_a, *lines_b], workers=workers)
    distances = pooled.as_array()

    summary_a = frechet_summary(DistanceMatrix.from_array(distances[:n_a, :n_a]), power=power)
    summary_b = frechet_summary(DistanceMatrix.from_array(distances[n_a:, n_a:]), power=power)
    observed = _ratio(summary_b.variance_numerator, n_b, summary_a.variance_numerator, n_a)

    logger.info(
        "line_permutation_test_started",
        n_a=n_a,
        n_b=n_b,
        n_resamples=n_resamples,
        seed=seed,
        observed=float(observed),
    )
    task = partial(_line_resample, seed=seed, distances=distances, n_a=n_a, power=power)
    ratios = _run(task, n_resamples, workers)

    result = _result(observed, ratios, tail, seed, power, corrected)
    logger.info("line_permutation_test_finished", p_value=result.p_value)
    return result


def counts_permutation_test(
    counts_a: CountTable,
    counts_b: CountTable,
    matrix: DistanceMatrix,
    n_resamples: int,
    seed: int,
    power: int = 2,
    weighting: Weighting = Weighting.PAPER_DC_SQUARED,
    tail: Tail = Tail.ONE_SIDED_GREATER,
    corrected: bool = False,
    workers: int = 1,
) -> PermTestResult:
    """Test equal variability of two count tables over a shared pattern list.

    The pooled multiset of pattern labels is shuffled and split into
    samples of sizes (counts_a.total, counts_b.total); each side is
    re-tabulated over the fixed pattern list and summarized with the same
    distance matrix.

    Args:
        counts_a: First table (ratio denominator)
        counts_b: Second table (ratio numerator)
        matrix: Distances between the patterns; its labels, when present,
            fix the pattern order
        n_resamples: Number of shuffles
        seed: Unsigned 64-bit master seed
        power: Exponent applied to each term
        weighting: Objective form
        tail: Qualifying rule for the p-value
        corrected: Use the (b+1)/(n+1) p-value
        workers: Process pool size

    Raises:
        AlignmentError: if the tables do not fit the matrix's pattern list
    """
    if n_resamples < 1:
        raise ValueError("n_resamples must be positive")
    resample_generator(seed, 0)

    universe = list(matrix.labels) if matrix.labels is not None else union_patterns(counts_a, counts_b)
    if len(universe) != matrix.n:
        raise AlignmentError(f"{len(universe)} patterns for a {matrix.n}-row matrix")
    try:
        table_a, table_b = counts_a.aligned(universe), counts_b.aligned(universe)
    except ValueError as e:
        raise AlignmentError(str(e))

    summary_a = weighted_frechet(matrix, table_a, power=power, weighting=weighting)
    summary_b = weighted_frechet(matrix, table_b, power=power, weighting=weighting)
    n_a, n_b = table_a.total, table_b.total
    observed = _ratio(summary_b.variance_numerator, n_b, summary_a.variance_numerator, n_a)

    combined = np.array(table_a.counts, dtype=np.int64) + np.array(table_b.counts, dtype=np.int64)
    labels = np.repeat(np.arange(matrix.n), combined)

    logger.info(
        "counts_permutation_test_started",
        n_a=n_a,
        n_b=n_b,
        patterns=matrix.n,
        n_resamples=n_resamples,
        seed=seed,
        observed=float(observed),
    )
    task = partial(
        _counts_resample,
        seed=seed,
        labels=labels,
        combined=combined,
        distances=matrix.as_array(),
        n_a=n_a,
        power=power,
        weighting=weighting,
    )
    ratios = _run(task, n_resamples, workers)

    result = _result(observed, ratios, tail, seed, power, corrected)
    logger.info("counts_permutation_test_finished", p_value=result.p_value)
    return result
