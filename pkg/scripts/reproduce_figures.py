#!/usr/bin/env python3
"""
Recompute every worked number shipped with versevar

This runs the library end to end on the bundled fixtures:
- codes the ten Prologue lines under both variants
- the 10x10 distance matrix and its generalized mean and variance
- weighted variances of the two meter count tables
- the line-level and count-level permutation tests

Usage:
    python scripts/reproduce_figures.py [--seed SEED] [--resamples N] [--out-dir DIR]

Resampled p-values depend on the seed; everything else is exact.
"""

import argparse
import sys
from pathlib import Path

from shared.schemas import CodingVariant, Weighting
from versevar.coding import auto_code_line, load_lexicon, tokenize
from versevar.core import (
    configure_logging,
    counts_permutation_test,
    distance_matrix,
    frechet_summary,
    line_permutation_test,
    variance_ratio,
    weighted_frechet,
)
from versevar.corpus import load_fixture
from versevar.viz import heatmap_pgm, histogram, histogram_csv, perm_report, ratio_report, summary_report


def check(label: str, got: object, expected: object) -> bool:
    ok = got == expected
    print(f"  [{'ok' if ok else 'MISMATCH'}] {label}: {got}" + ("" if ok else f" (expected {expected})"))
    return ok


def code_lines() -> bool:
    print("Position strings")
    lexicon = load_lexicon()
    lines = load_fixture("figure1_lines").payload
    ok = True
    for variant, fixture in ((CodingVariant.A, "figure1_codes_variant_a"), (CodingVariant.B, "figure1_codes_variant_b")):
        codes = [auto_code_line(tokenize(line), variant, lexicon).bits for line in lines]
        ok &= check(f"variant {variant.value}", codes, load_fixture(fixture).payload)
    return ok


def line_statistics(seed: int, resamples: int, out_dir: Path | None) -> bool:
    print("Ten coded lines")
    codes_a = load_fixture("figure1_codes_variant_a").payload
    codes_b = load_fixture("figure1_codes_variant_b").payload
    matrix = distance_matrix(codes_b, labels=codes_b)
    ok = check("distance matrix", matrix.entries, load_fixture("figure2_matrix").payload.entries)

    summary = frechet_summary(matrix)
    print(summary_report(summary), end="")
    ok &= check("variance", summary.variance_text, "59/10")
    print(summary_report(frechet_summary(matrix, power=1)), end="")

    summary_a = frechet_summary(distance_matrix(codes_a))
    print(ratio_report(summary, summary_a, variance_ratio(summary, summary_a)), end="")
    result = line_permutation_test(codes_a, codes_b, n_resamples=resamples, seed=seed)
    print(perm_report(result), end="")

    if out_dir is not None:
        (out_dir / "figure2.pgm").write_text(heatmap_pgm(matrix), encoding="utf-8")
        (out_dir / "lines_hist.csv").write_text(histogram_csv(histogram(result.resample_ratios, 20)), encoding="utf-8")
    return ok


def count_statistics(seed: int, resamples: int, out_dir: Path | None) -> bool:
    print("Meter count tables")
    sggk = load_fixture("table1_sggk").payload
    ppb = load_fixture("table1_ppb").payload
    matrix = load_fixture("figure7_matrix").payload
    ok = check("pattern distances", distance_matrix(load_fixture("table1_combined").payload.patterns).entries, matrix.entries)

    for weighting, expected in ((Weighting.PAPER_DC_SQUARED, (71011, 1352636)), (Weighting.CONVENTIONAL, (733, 5818))):
        a = weighted_frechet(matrix, sggk, weighting=weighting)
        b = weighted_frechet(matrix, ppb, weighting=weighting)
        ok &= check(f"{weighting.value} numerators", (a.variance_numerator, b.variance_numerator), expected)
        ok &= check(f"{weighting.value} means", (a.mean_items, b.mean_items), (["aa/ax"], ["aa/ax"]))
        print(ratio_report(b, a, variance_ratio(b, a)), end="")

    result = counts_permutation_test(sggk, ppb, matrix, n_resamples=resamples, seed=seed)
    print(perm_report(result), end="")
    ok &= check("observed ratio", result.observed_exact, "2718798360/497290033")

    if out_dir is not None:
        (out_dir / "figure7.pgm").write_text(heatmap_pgm(matrix), encoding="utf-8")
        (out_dir / "counts_hist.csv").write_text(histogram_csv(histogram(result.resample_ratios, 20)), encoding="utf-8")
    return ok


def main() -> int:
    parser = argparse.ArgumentParser(description="Recompute the bundled worked numbers")
    parser.add_argument("--seed", type=int, default=20240601, help="Master seed for resampling")
    parser.add_argument("--resamples", type=int, default=1000, help="Resamples per test")
    parser.add_argument("--out-dir", type=Path, default=None, help="Write heatmaps and histograms here")
    args = parser.parse_args()

    configure_logging()
    if args.out_dir is not None:
        args.out_dir.mkdir(parents=True, exist_ok=True)

    ok = code_lines()
    ok &= line_statistics(args.seed, args.resamples, args.out_dir)
    ok &= count_statistics(args.seed, args.resamples, args.out_dir)
    print("All checks passed" if ok else "Some checks FAILED")
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
