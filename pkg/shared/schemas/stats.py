"""Schemas for distance matrices, count tables and test results.

Matrix entries, objectives and variance numerators are exact integers;
floats appear only in derived presentation fields.
"""

import math
from collections.abc import Sequence
from enum import Enum
from fractions import Fraction
from typing import Any

import numpy as np
from pydantic import (
    ConfigDict,
    Field,
    computed_field,
    field_validator,
    model_validator,
)

from .base import RecordModel


class Tail(str, Enum):
    """Qualifying rule for resampled ratios."""

    TWO_TAILED_RECIPROCAL = "two_tailed_reciprocal"
    ONE_SIDED_GREATER = "one_sided_greater"


class Weighting(str, Enum):
    """Row objective for count-weighted summaries.

    PAPER_DC_SQUARED squares the count-scaled distances, sum_j (c_j * d_ij)^p.
    CONVENTIONAL weights the powered distances, sum_j c_j * d_ij^p.
    """

    PAPER_DC_SQUARED = "paper_dc_squared"
    CONVENTIONAL = "conventional"


class DistanceMatrix(RecordModel):
    """Dense symmetric matrix of pairwise integer distances.

    Attributes:
        entries: n x n nonnegative integers with zero diagonal
        labels: Optional item labels, one per row
    """

    model_config = ConfigDict(frozen=True)

    entries: tuple[tuple[int, ...], ...]
    labels: tuple[str, ...] | None = None

    @model_validator(mode="after")
    def _metric_axioms(self) -> "DistanceMatrix":
        n = len(self.entries)
        if n == 0:
            raise ValueError("distance matrix needs at least one row")
        for i, row in enumerate(self.entries):
            if len(row) != n:
                raise ValueError(f"row {i + 1} has {len(row)} entries, expected {n}")
        if self.labels is not None and len(self.labels) != n:
            raise ValueError(f"{len(self.labels)} labels for {n} rows")

        arr = np.array(self.entries, dtype=np.int64).reshape(n, n)
        if (arr < 0).any():
            raise ValueError("distances must be nonnegative")
        if (np.diagonal(arr) != 0).any():
            raise ValueError("diagonal must be zero")
        if not np.array_equal(arr, arr.T):
            raise ValueError("matrix must be symmetric")
        for j in range(n):
            # d(i, k) <= d(i, j) + d(j, k) for every i, k
            if (arr > arr[:, j : j + 1] + arr[j : j + 1, :]).any():
                raise ValueError(f"triangle inequality fails through row {j + 1}")

        return self

    @property
    def n(self) -> int:
        """Number of items."""
        return len(self.entries)

    def as_array(self) -> np.ndarray:
        """Entries as a read-only int64 array."""
        arr = np.array(self.entries, dtype=np.int64).reshape(self.n, self.n)
        arr.setflags(write=False)
        return arr

    def submatrix(self, indices: Sequence[int]) -> np.ndarray:
        """Entries restricted to the given rows and columns, in that order."""
        idx = np.asarray(indices, dtype=np.intp)
        return self.as_array()[np.ix_(idx, idx)]

    def to_csv(self) -> str:
        """Comma-separated integers, one row per line, no header."""
        return "".join(",".join(str(v) for v in row) + "\n" for row in self.entries)

    @classmethod
    def from_csv(cls, text: str, labels: Sequence[str] | None = None) -> "DistanceMatrix":
        """Parse the format written by to_csv.

        Raises:
            ValueError: naming the 1-based row and column of a bad cell
        """
        rows: list[tuple[int, ...]] = []
        for r, line in enumerate(text.splitlines(), start=1):
            if not line.strip():
                continue
            cells = []
            for c, cell in enumerate(line.split(","), start=1):
                try:
                    cells.append(int(cell.strip()))
                except ValueError:
                    raise ValueError(f"malformed cell {cell.strip()!r} at row {r}, column {c}")
            rows.append(tuple(cells))
        return cls(entries=tuple(rows), labels=tuple(labels) if labels is not None else None)

    @classmethod
    def from_array(cls, arr: np.ndarray, labels: Sequence[str] | None = None) -> "DistanceMatrix":
        """Build from a square integer array."""
        entries = tuple(tuple(int(v) for v in row) for row in arr.tolist())
        return cls(entries=entries, labels=tuple(labels) if labels is not None else None)


class CountRow(RecordModel):
    """One distinct item and how often it occurs."""

    pattern: str
    count: int = Field(ge=0)


class CountTable(RecordModel):
    """Frequencies of distinct items (Table 1 style).

    Attributes:
        rows: (pattern, count) pairs in table order
    """

    rows: list[CountRow]

    @model_validator(mode="after")
    def _check(self) -> "CountTable":
        seen: set[str] = set()
        for row in self.rows:
            if row.pattern in seen:
                raise ValueError(f"duplicate pattern {row.pattern!r}")
            seen.add(row.pattern)
        if self.total <= 0:
            raise ValueError("count table total must be positive")
        return self

    @classmethod
    def from_pairs(cls, pairs: Sequence[tuple[str, int]]) -> "CountTable":
        return cls(rows=[CountRow(pattern=p, count=c) for p, c in pairs])

    @property
    def total(self) -> int:
        return sum(row.count for row in self.rows)

    @property
    def patterns(self) -> list[str]:
        return [row.pattern for row in self.rows]

    @property
    def counts(self) -> list[int]:
        return [row.count for row in self.rows]

    def count_of(self, pattern: str) -> int:
        for row in self.rows:
            if row.pattern == pattern:
                return row.count
        return 0

    def aligned(self, universe: Sequence[str]) -> "CountTable":
        """Re-express over ``universe``, zero-filling absent patterns.

        Raises:
            ValueError: if a counted pattern is missing from the universe
        """
        missing = [p for p in self.patterns if p not in set(universe)]
        if missing:
            raise ValueError(f"patterns not in universe: {', '.join(missing)}")
        return CountTable.from_pairs([(p, self.count_of(p)) for p in universe])


def union_patterns(*tables: CountTable) -> list[str]:
    """Patterns of all tables in first-seen order."""
    out: list[str] = []
    for table in tables:
        for pattern in table.patterns:
            if pattern not in out:
                out.append(pattern)
    return out


class FrechetSummary(RecordModel):
    """Generalized mean and variance of a finite sample.

    Attributes:
        mean_indices: Rows attaining the minimum, in ascending order
        mean_items: The attested items at those rows, when known
        variance_numerator: Minimal row objective (exact)
        variance_denominator: Number of observations
        power: Exponent applied to distances
        label: "mean", or "median" for power 1
    """

    mean_indices: list[int] = Field(min_length=1)
    mean_items: list[str] = Field(default_factory=list)
    variance_numerator: int = Field(ge=0)
    variance_denominator: int = Field(ge=1)
    power: int = Field(default=2, ge=1)
    label: str = "mean"

    @field_validator("mean_indices")
    @classmethod
    def _sorted_unique(cls, v: list[int]) -> list[int]:
        if any(i < 0 for i in v):
            raise ValueError("mean indices must be nonnegative")
        return sorted(set(v))

    @computed_field  # type: ignore[prop-decorator]
    @property
    def variance_value(self) -> float:
        return self.variance_numerator / self.variance_denominator

    @property
    def variance(self) -> Fraction:
        """Exact variance."""
        return Fraction(self.variance_numerator, self.variance_denominator)

    @property
    def variance_text(self) -> str:
        """Unreduced fraction as printed in reports, e.g. ``59/10``."""
        return f"{self.variance_numerator}/{self.variance_denominator}"


class PermTestResult(RecordModel):
    """Outcome of a permutation test of a variance ratio.

    Attributes:
        observed_ratio: Second sample's variance over the first's
        observed_exact: The same ratio as an exact fraction, when finite
        resample_ratios: Ratio for each resample, in index order
        p_value: Qualifying proportion under the tail rule
        tail: Tail rule applied
        seed: Master seed
        n_resamples: Number of resamples
        power: Exponent applied to distances
        corrected: True when p_value is (b+1)/(n+1)
    """

    model_config = ConfigDict(ser_json_inf_nan="constants")

    observed_ratio: float = Field(ge=0)
    observed_exact: str | None = None
    resample_ratios: list[float]
    p_value: float = Field(ge=0.0, le=1.0)
    tail: Tail
    seed: int = Field(ge=0, lt=2**64)
    n_resamples: int = Field(ge=1)
    power: int = Field(default=2, ge=1)
    corrected: bool = False

    @model_validator(mode="after")
    def _lengths(self) -> "PermTestResult":
        if len(self.resample_ratios) != self.n_resamples:
            raise ValueError(
                f"{len(self.resample_ratios)} ratios for {self.n_resamples} resamples"
            )
        return self

    @property
    def max_resample(self) -> float:
        return max(self.resample_ratios)

    @property
    def mean_resample(self) -> float:
        if any(math.isinf(r) for r in self.resample_ratios):
            return math.inf
        return math.fsum(self.resample_ratios) / self.n_resamples

    def summary_record(self) -> dict[str, Any]:
        """The compact record written by reports."""
        return {
            "observed": self.observed_ratio,
            "observed_exact": self.observed_exact,
            "p_value": self.p_value,
            "tail": self.tail.value,
            "seed": self.seed,
            "n_resamples": self.n_resamples,
            "max_resample": self.max_resample,
            "mean_resample": self.mean_resample,
        }

    def ratios_csv(self) -> str:
        """One ratio per line in resample order."""
        return "".join(f"{r!r}\n" for r in self.resample_ratios)
