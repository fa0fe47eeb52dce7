"""Data schemas for versevar."""

from .base import RecordModel
from .coding import (
    AnnotatedLine,
    CodingVariant,
    MeterPattern,
    PositionString,
    SoundClass,
    SoundKind,
    Token,
)
from .corpus import Fixture, FixtureKind, IngestedPoem
from .stats import (
    CountRow,
    CountTable,
    DistanceMatrix,
    FrechetSummary,
    PermTestResult,
    Tail,
    Weighting,
    union_patterns,
)

__all__ = [
    "RecordModel",
    # Coding schemas
    "AnnotatedLine",
    "CodingVariant",
    "MeterPattern",
    "PositionString",
    "SoundClass",
    "SoundKind",
    "Token",
    # Statistics schemas
    "CountRow",
    "CountTable",
    "DistanceMatrix",
    "FrechetSummary",
    "PermTestResult",
    "Tail",
    "Weighting",
    "union_patterns",
    # Corpus schemas
    "Fixture",
    "FixtureKind",
    "IngestedPoem",
]
