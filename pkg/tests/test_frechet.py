"""Tests for generalized means, variances and their ratio."""

from fractions import Fraction

import numpy as np
import pytest

from shared.schemas import CountTable, DistanceMatrix, FrechetSummary, Weighting
from versevar.core import (
    distance_matrix,
    frechet_summary,
    tabulate,
    variance_ratio,
    weighted_frechet,
)
from versevar.core.frechet import row_objectives, weighted_objectives
from versevar.corpus import load_fixture
from versevar.errors import AlignmentError, DegenerateSampleError, EmptyDatasetError


@pytest.fixture
def figure2() -> DistanceMatrix:
    return load_fixture("figure2_matrix").payload


@pytest.fixture
def figure7() -> DistanceMatrix:
    return load_fixture("figure7_matrix").payload


@pytest.fixture
def sggk() -> CountTable:
    return load_fixture("table1_sggk").payload


@pytest.fixture
def ppb() -> CountTable:
    return load_fixture("table1_ppb").payload


class TestFrechetSummary:
    """Tests for frechet_summary."""

    def test_row_sums_of_squares(self, figure2):
        objectives = row_objectives(figure2.as_array(), 2)

        assert objectives.tolist() == [94, 97, 75, 75, 66, 70, 70, 106, 104, 59]

    def test_variance_59_over_10(self, figure2):
        summary = frechet_summary(figure2, n=10)

        assert summary.variance_numerator == 59
        assert summary.variance_denominator == 10
        assert summary.variance == Fraction(59, 10)
        assert summary.mean_indices == [9]
        assert summary.mean_items == ["010010100"]

    def test_power_one_is_median(self, figure2):
        assert row_objectives(figure2.as_array(), 1).tolist() == [28, 29, 23, 23, 24, 24, 24, 30, 30, 21]

        summary = frechet_summary(figure2, power=1)
        assert summary.variance == Fraction(21, 10)
        assert summary.mean_indices == [9]
        assert summary.label == "median"

    def test_identical_strings(self):
        summary = frechet_summary(distance_matrix(["0110"] * 4))

        assert summary.variance_numerator == 0
        assert summary.mean_indices == [0, 1, 2, 3]

    def test_ties_reported_in_order(self):
        summary = frechet_summary(distance_matrix(["0", "1"]))

        assert summary.mean_indices == [0, 1]
        assert summary.variance == Fraction(1, 2)

    def test_numerator_matches_every_mean_row(self):
        rng = np.random.default_rng(3)
        items = ["".join(rng.choice(list("01"), size=int(rng.integers(1, 9)))) for _ in range(25)]
        matrix = distance_matrix(items)
        arr = matrix.as_array()

        summary = frechet_summary(matrix)
        for i in summary.mean_indices:
            assert summary.variance_numerator == sum(int(d) ** 2 for d in arr[i])
        assert all(summary.variance_numerator <= sum(int(d) ** 2 for d in row) for row in arr)

    def test_n_must_match(self, figure2):
        with pytest.raises(AlignmentError):
            frechet_summary(figure2, n=11)

    def test_power_must_be_positive(self, figure2):
        with pytest.raises(ValueError):
            frechet_summary(figure2, power=0)


class TestWeightedFrechet:
    """Tests for weighted_frechet."""

    def test_sggk(self, figure7, sggk):
        summary = weighted_frechet(figure7, sggk, n_lines=2010)

        assert summary.variance_numerator == 71011
        assert round(summary.variance_value, 2) == 35.33
        assert summary.mean_items == ["aa/ax"]

    def test_ppb(self, figure7, ppb):
        summary = weighted_frechet(figure7, ppb, n_lines=7003)

        assert summary.variance_numerator == 1352636
        assert round(summary.variance_value, 2) == 193.15
        assert summary.mean_items == ["aa/ax"]

    def test_conventional_weighting(self, figure7, sggk, ppb):
        a = weighted_frechet(figure7, sggk, weighting=Weighting.CONVENTIONAL)
        b = weighted_frechet(figure7, ppb, weighting=Weighting.CONVENTIONAL)

        assert a.variance_numerator == 733
        assert b.variance_numerator == 5818
        assert a.mean_items == b.mean_items == ["aa/ax"]

    def test_single_nonzero_count(self, figure7):
        patterns = list(figure7.labels)
        counts = CountTable.from_pairs([(p, 12 if p == "ab/ba" else 0) for p in patterns])

        summary = weighted_frechet(figure7, counts)
        assert summary.variance_numerator == 0
        assert summary.mean_indices == [patterns.index("ab/ba")]

    def test_unit_counts_match_unweighted(self, figure2):
        counts = CountTable.from_pairs([(str(i), 1) for i in range(figure2.n)])
        matrix = DistanceMatrix(entries=figure2.entries)

        for weighting in Weighting:
            weighted = weighted_frechet(matrix, counts, n_lines=10, weighting=weighting)
            plain = frechet_summary(matrix)
            assert weighted.variance == plain.variance
            assert weighted.mean_indices == plain.mean_indices

    def test_misaligned_length(self, figure7):
        with pytest.raises(AlignmentError):
            weighted_frechet(figure7, CountTable.from_pairs([("aa/ax", 1)]))

    def test_misaligned_labels(self, figure7, sggk):
        reordered = CountTable(rows=list(reversed(sggk.rows)))

        with pytest.raises(AlignmentError):
            weighted_frechet(figure7, reordered)

    def test_n_lines_must_be_total(self, figure7, sggk):
        with pytest.raises(AlignmentError):
            weighted_frechet(figure7, sggk, n_lines=2000)

    def test_objectives_are_exact_for_large_counts(self):
        entries = np.array([[0, 7], [7, 0]], dtype=np.int64)
        counts = np.array([10**9, 10**9], dtype=np.int64)

        objectives = weighted_objectives(entries, counts, power=2)
        assert [int(v) for v in objectives] == [49 * 10**18, 49 * 10**18]


class TestVarianceRatio:
    """Tests for variance_ratio."""

    def test_shared_denominator(self):
        a = FrechetSummary(mean_indices=[0], variance_numerator=1601, variance_denominator=220)
        b = FrechetSummary(mean_indices=[0], variance_numerator=1773, variance_denominator=220)

        assert variance_ratio(b, a) == Fraction(1773, 1601)
        assert round(float(variance_ratio(b, a)), 3) == 1.107

    def test_table_counts_ratio(self, figure7, sggk, ppb):
        a = weighted_frechet(figure7, sggk)
        b = weighted_frechet(figure7, ppb)

        ratio = variance_ratio(b, a)
        assert ratio == Fraction(1352636 * 2010, 7003 * 71011)
        assert round(float(ratio), 2) == 5.47

    def test_reciprocal(self, figure2):
        a = frechet_summary(figure2)
        b = frechet_summary(distance_matrix(["0", "11", "101"]))

        assert variance_ratio(a, b) * variance_ratio(b, a) == 1
        assert variance_ratio(a, a) == 1

    def test_degenerate(self):
        zero = FrechetSummary(mean_indices=[0], variance_numerator=0, variance_denominator=3)
        one = FrechetSummary(mean_indices=[0], variance_numerator=1, variance_denominator=3)

        with pytest.raises(DegenerateSampleError, match="degenerate sample"):
            variance_ratio(one, zero)
        assert variance_ratio(zero, one) == 0


class TestTabulate:
    """Tests for tabulate."""

    def test_first_seen_order(self):
        table = tabulate(["01", "10", "01", "11", "01"])

        assert table.patterns == ["01", "10", "11"]
        assert table.counts == [3, 1, 1]

    def test_weighted_equals_pooled(self):
        items = ["0110", "0110", "1", "010", "1", "0110"]
        table = tabulate(items)
        distinct = distance_matrix(table.patterns, labels=table.patterns)

        weighted = weighted_frechet(distinct, table, weighting=Weighting.CONVENTIONAL)
        pooled = frechet_summary(distance_matrix(items))
        assert weighted.variance == pooled.variance

    def test_empty(self):
        with pytest.raises(EmptyDatasetError):
            tabulate([])
