"""Tests for record schemas."""

import math

import pytest
from pydantic import ValidationError

from shared.schemas import (
    AnnotatedLine,
    CountTable,
    DistanceMatrix,
    FrechetSummary,
    MeterPattern,
    PermTestResult,
    PositionString,
    SoundClass,
    SoundKind,
    Tail,
    Token,
    union_patterns,
)


class TestDistanceMatrix:
    """Tests for DistanceMatrix schema."""

    def test_create_matrix(self):
        matrix = DistanceMatrix(entries=((0, 1), (1, 0)), labels=("0", "1"))

        assert matrix.n == 2
        assert matrix.as_array().tolist() == [[0, 1], [1, 0]]
        assert matrix.labels == ("0", "1")

    def test_array_is_read_only(self):
        matrix = DistanceMatrix(entries=((0, 1), (1, 0)))
        with pytest.raises(ValueError):
            matrix.as_array()[0, 1] = 5

    def test_rejects_asymmetry(self):
        with pytest.raises(ValidationError, match="symmetric"):
            DistanceMatrix(entries=((0, 1), (2, 0)))

    def test_rejects_nonzero_diagonal(self):
        with pytest.raises(ValidationError, match="diagonal"):
            DistanceMatrix(entries=((1, 1), (1, 0)))

    def test_rejects_triangle_violation(self):
        with pytest.raises(ValidationError, match="triangle"):
            DistanceMatrix(entries=((0, 1, 5), (1, 0, 1), (5, 1, 0)))

    def test_rejects_ragged_rows(self):
        with pytest.raises(ValidationError):
            DistanceMatrix(entries=((0, 1), (1,)))

    def test_rejects_empty(self):
        with pytest.raises(ValidationError):
            DistanceMatrix(entries=())

    def test_label_count_must_match(self):
        with pytest.raises(ValidationError, match="labels"):
            DistanceMatrix(entries=((0,),), labels=("a", "b"))

    def test_csv(self):
        matrix = DistanceMatrix(entries=((0, 2), (2, 0)))

        assert matrix.to_csv() == "0,2\n2,0\n"
        assert DistanceMatrix.from_csv("0,2\n2,0\n") == matrix

    def test_csv_error_names_cell(self):
        with pytest.raises(ValueError, match="row 2, column 1"):
            DistanceMatrix.from_csv("0,1\nx,0\n")

    def test_submatrix(self):
        matrix = DistanceMatrix(entries=((0, 1, 2), (1, 0, 1), (2, 1, 0)))

        assert matrix.submatrix([2, 0]).tolist() == [[0, 2], [2, 0]]

    def test_msgpack_serialization(self):
        matrix = DistanceMatrix(entries=((0, 3), (3, 0)), labels=("old", "halde"))

        packed = matrix.to_msgpack()
        assert isinstance(packed, bytes)
        assert DistanceMatrix.from_msgpack(packed) == matrix


class TestCountTable:
    """Tests for CountTable schema."""

    def test_total(self):
        table = CountTable.from_pairs([("aa/ax", 3), ("xx/xx", 0), ("ab/ab", 2)])

        assert table.total == 5
        assert table.patterns == ["aa/ax", "xx/xx", "ab/ab"]
        assert table.count_of("ab/ab") == 2
        assert table.count_of("aa/bb") == 0

    def test_rejects_duplicates(self):
        with pytest.raises(ValidationError, match="duplicate"):
            CountTable.from_pairs([("aa/ax", 1), ("aa/ax", 2)])

    def test_rejects_zero_total(self):
        with pytest.raises(ValidationError):
            CountTable.from_pairs([("aa/ax", 0)])

    def test_rejects_negative_count(self):
        with pytest.raises(ValidationError):
            CountTable.from_pairs([("aa/ax", -1)])

    def test_aligned_zero_fills(self):
        table = CountTable.from_pairs([("b", 2)])

        aligned = table.aligned(["a", "b", "c"])
        assert aligned.patterns == ["a", "b", "c"]
        assert aligned.counts == [0, 2, 0]

    def test_aligned_rejects_missing_pattern(self):
        with pytest.raises(ValueError, match="not in universe"):
            CountTable.from_pairs([("z", 1)]).aligned(["a"])

    def test_union_patterns(self):
        a = CountTable.from_pairs([("x", 1), ("y", 1)])
        b = CountTable.from_pairs([("y", 1), ("z", 1)])

        assert union_patterns(a, b) == ["x", "y", "z"]


class TestFrechetSummary:
    """Tests for FrechetSummary schema."""

    def test_variance(self):
        summary = FrechetSummary(mean_indices=[9], variance_numerator=59, variance_denominator=10)

        assert summary.variance_text == "59/10"
        assert summary.variance_value == 5.9
        assert summary.label == "mean"

    def test_indices_sorted(self):
        summary = FrechetSummary(mean_indices=[3, 1, 3], variance_numerator=0, variance_denominator=4)

        assert summary.mean_indices == [1, 3]

    def test_requires_mean(self):
        with pytest.raises(ValidationError):
            FrechetSummary(mean_indices=[], variance_numerator=0, variance_denominator=1)

    def test_record_includes_value(self):
        summary = FrechetSummary(mean_indices=[0], variance_numerator=1, variance_denominator=4)

        assert summary.model_dump()["variance_value"] == 0.25


class TestPermTestResult:
    """Tests for PermTestResult schema."""

    def _result(self, ratios: list[float]) -> PermTestResult:
        return PermTestResult(
            observed_ratio=2.0,
            observed_exact="2/1",
            resample_ratios=ratios,
            p_value=0.5,
            tail=Tail.ONE_SIDED_GREATER,
            seed=42,
            n_resamples=len(ratios),
        )

    def test_summaries(self):
        result = self._result([1.0, 3.0])

        assert result.max_resample == 3.0
        assert result.mean_resample == 2.0
        assert result.ratios_csv() == "1.0\n3.0\n"

    def test_infinite_resample(self):
        result = self._result([1.0, math.inf])

        assert math.isinf(result.mean_resample)
        assert result.ratios_csv() == "1.0\ninf\n"

    def test_length_must_match(self):
        with pytest.raises(ValidationError):
            PermTestResult(
                observed_ratio=1.0,
                resample_ratios=[1.0],
                p_value=1.0,
                tail=Tail.TWO_TAILED_RECIPROCAL,
                seed=0,
                n_resamples=2,
            )

    def test_seed_is_unsigned_64_bit(self):
        with pytest.raises(ValidationError):
            PermTestResult(
                observed_ratio=1.0,
                resample_ratios=[1.0],
                p_value=1.0,
                tail=Tail.TWO_TAILED_RECIPROCAL,
                seed=2**64,
                n_resamples=1,
            )

    def test_msgpack_serialization(self):
        result = self._result([1.0, 3.0])

        unpacked = PermTestResult.from_msgpack(result.to_msgpack())
        assert unpacked == result


class TestCodingSchemas:
    """Tests for token, line and pattern schemas."""

    def test_caesura_token(self):
        token = Token(surface="/", is_caesura=True)

        assert token.is_caesura
        with pytest.raises(ValidationError):
            Token(surface="|", is_caesura=True)

    def test_word_token_needs_normalized_form(self):
        with pytest.raises(ValidationError):
            Token(surface="sonne")

    def test_sound_class_key(self):
        assert SoundClass(kind=SoundKind.SH).key == "SH"
        assert SoundClass(kind=SoundKind.CLUSTER, letters="ch").key == "CLUSTER(ch)"
        assert SoundClass(kind=SoundKind.SH) != SoundClass(kind=SoundKind.S)

    def test_cluster_needs_letters(self):
        with pytest.raises(ValidationError):
            SoundClass(kind=SoundKind.CLUSTER)

    def test_position_string_alphabet(self):
        assert len(PositionString(bits="0101")) == 4
        with pytest.raises(ValidationError):
            PositionString(bits="012")

    def test_annotated_line_alignment(self):
        tokens = [
            Token(surface="a", normalized="a"),
            Token(surface="/", is_caesura=True),
            Token(surface="b", normalized="b"),
        ]

        line = AnnotatedLine(tokens=tokens, marks=[True, False])
        assert line.position_string.bits == "10"
        with pytest.raises(ValidationError):
            AnnotatedLine(tokens=tokens, marks=[True])

    def test_meter_pattern_halves(self):
        pattern = MeterPattern(text="aaa/xx")

        assert pattern.a_verse == "aaa"
        assert pattern.b_verse == "xx"

    @pytest.mark.parametrize("text", ["aa//ax", "aaax", "ac/ax", "/ax"])
    def test_meter_pattern_rejects(self, text):
        with pytest.raises(ValidationError):
            MeterPattern(text=text)
