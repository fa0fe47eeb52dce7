"""Schemas for shipped fixtures and ingested poems."""

from enum import Enum

from pydantic import BaseModel, Field, field_validator

from .stats import CountTable, DistanceMatrix


class FixtureKind(str, Enum):
    """What a fixture's payload holds."""

    LINES = "lines"
    CODES = "codes"
    MATRIX = "matrix"
    COUNTS = "counts"


class Fixture(BaseModel):
    """Golden data reproduced from the published analysis.

    Attributes:
        name: Stable identifier, addressable from the CLI
        kind: Payload kind
        payload: Lines, codes, a distance matrix or a count table
        provenance: Where in the source publication the data is printed
    """

    name: str
    kind: FixtureKind
    payload: list[str] | DistanceMatrix | CountTable
    provenance: str

    @field_validator("provenance")
    @classmethod
    def _cited(cls, v: str) -> str:
        if not v.strip():
            raise ValueError("fixtures must cite their source")
        return v


class IngestedPoem(BaseModel):
    """Lines read from a poem file after skip directives.

    Attributes:
        source: Path or fixture name the lines came from
        lines: Kept lines in file order
        line_numbers: 1-based file line number of each kept line
        skipped: Number of lines dropped by directives, comments or blanks
    """

    source: str
    lines: list[str]
    line_numbers: list[int]
    skipped: int = Field(default=0, ge=0)

    @property
    def kept(self) -> int:
        return len(self.lines)

    @property
    def is_annotated(self) -> bool:
        """True when the file marks alliterating words with asterisks."""
        return any("*" in line for line in self.lines)
