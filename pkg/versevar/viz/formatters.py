"""Text and record formatters for analysis results.

Reports print exact fractions next to decimals, e.g. ``59/10 = 5.9``.
"""

import math
from collections.abc import Sequence
from fractions import Fraction
from typing import Any

from shared.schemas import DistanceMatrix, FrechetSummary, PermTestResult


def format_decimal(value: float | Fraction) -> str:
    """Decimal rendering used in every report."""
    if isinstance(value, float) and math.isinf(value):
        return "inf"
    return f"{float(value):.6g}"


def format_fraction(numerator: int, denominator: int) -> str:
    """``num/den = decimal``, the fraction left unreduced."""
    return f"{numerator}/{denominator} = {format_decimal(Fraction(numerator, denominator))}"


def format_summary(summary: FrechetSummary) -> dict[str, Any]:
    """Machine-readable record of a Frechet summary.

    Args:
        summary: Summary to format

    Returns:
        Dictionary with mean indices and items, the exact variance parts,
        its decimal value and the power
    """
    return summary.model_dump(mode="json")


def summary_report(summary: FrechetSummary, title: str | None = None) -> str:
    lines = [title] if title else []
    rows = ", ".join(str(i + 1) for i in summary.mean_indices)
    lines.append(f"generalized {summary.label}: row {rows}")
    for item in summary.mean_items:
        lines.append(f"  {item}")
    lines.append(f"variance: {format_fraction(summary.variance_numerator, summary.variance_denominator)}")
    if summary.power != 2:
        lines.append(f"power: {summary.power}")
    return "\n".join(lines) + "\n"


def ratio_report(numerator: FrechetSummary, denominator: FrechetSummary, ratio: Fraction) -> str:
    return (
        f"ratio: {numerator.variance_text} / {denominator.variance_text} "
        f"= {ratio.numerator}/{ratio.denominator} = {format_decimal(ratio)}\n"
    )


def _qualifying_text(result: PermTestResult) -> str:
    n = result.n_resamples + 1 if result.corrected else result.n_resamples
    return f"{round(result.p_value * n)}/{n}"


def format_perm_result(result: PermTestResult) -> dict[str, Any]:
    """Machine-readable record of a permutation test, ratios excluded.

    Infinite ratios become None so the record stays valid JSON.
    """
    record = {
        key: None if isinstance(value, float) and not math.isfinite(value) else value
        for key, value in result.summary_record().items()
    }
    record["power"] = result.power
    record["corrected"] = result.corrected
    return record


def perm_report(result: PermTestResult) -> str:
    """Plain-text report of a permutation test."""
    observed = format_decimal(result.observed_ratio)
    if result.observed_exact is not None:
        observed = f"{result.observed_exact} = {observed}"
    lines = [
        f"observed ratio: {observed}",
        f"p-value ({result.tail.value}): {_qualifying_text(result)} = {result.p_value:.3f}",
        f"resamples: {result.n_resamples} (seed {result.seed})",
        f"resample max: {format_decimal(result.max_resample)}",
        f"resample mean: {format_decimal(result.mean_resample)}",
    ]
    return "\n".join(lines) + "\n"


def profile_report(
    matrix: DistanceMatrix, row_means: Sequence[Fraction], overall: Fraction
) -> str:
    """Rows by descending mean distance, outliers first."""
    labels = matrix.labels or tuple(str(i + 1) for i in range(matrix.n))
    order = sorted(range(matrix.n), key=lambda i: (-row_means[i], i))
    lines = [f"overall mean: {format_decimal(overall)}"]
    for i in order:
        lines.append(f"{i + 1}\t{labels[i]}\t{format_decimal(row_means[i])}")
    return "\n".join(lines) + "\n"
