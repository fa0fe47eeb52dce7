"""Schemas for coded poetic lines.

This module defines Pydantic models for tokens, initial-sound classes,
alliteration position strings, annotated lines and Oakden meter patterns.
"""

from enum import Enum

from pydantic import BaseModel, ConfigDict, Field, model_validator

METER_SYMBOLS = frozenset("abx")
CAESURA = "/"


class SoundKind(str, Enum):
    """Initial sound classes used for alliteration."""

    VOWEL = "VOWEL"
    B = "B"
    D = "D"
    F = "F"
    G_HARD = "G_HARD"
    J_SOFT_G = "J_SOFT_G"
    H = "H"
    K = "K"
    L = "L"
    M = "M"
    N = "N"
    P = "P"
    R = "R"
    S = "S"
    SH = "SH"
    T = "T"
    TH = "TH"
    V = "V"
    W = "W"
    Y = "Y"
    CLUSTER = "CLUSTER"


class CodingVariant(str, Enum):
    """Position string variants.

    A marks every word sharing the line's alliterating sound; B marks only
    stressed words, looking through unstressed prefixes.
    """

    A = "A"
    B = "B"


class SoundClass(BaseModel):
    """Initial sound of a word.

    Attributes:
        kind: Sound class
        letters: Spelling of the onset when kind is CLUSTER
    """

    model_config = ConfigDict(frozen=True)

    kind: SoundKind
    letters: str | None = None

    @model_validator(mode="after")
    def _cluster_letters(self) -> "SoundClass":
        if (self.kind == SoundKind.CLUSTER) != (self.letters is not None):
            raise ValueError("letters are given exactly for CLUSTER classes")
        return self

    @property
    def key(self) -> str:
        """Identifier such as ``SH`` or ``CLUSTER(ch)``."""
        if self.kind == SoundKind.CLUSTER:
            return f"CLUSTER({self.letters})"
        return self.kind.value

    def __str__(self) -> str:
        return self.key


class Token(BaseModel):
    """A word or caesura mark from a poetic line.

    Attributes:
        surface: Word as written, surrounding punctuation removed
        normalized: Lowercased NFC form used for classification
        is_caesura: True for the standalone "/" mark
    """

    model_config = ConfigDict(frozen=True)

    surface: str
    normalized: str = ""
    is_caesura: bool = False

    @model_validator(mode="after")
    def _check(self) -> "Token":
        if self.is_caesura and self.surface != CAESURA:
            raise ValueError("caesura tokens carry surface '/'")
        if not self.is_caesura and not self.normalized:
            raise ValueError("word tokens need a normalized form")
        return self


class PositionString(BaseModel):
    """Binary coding of a line, one bit per word (1 = alliterating)."""

    model_config = ConfigDict(frozen=True)

    bits: str = Field(pattern=r"^[01]*$")

    def __str__(self) -> str:
        return self.bits

    def __len__(self) -> int:
        return len(self.bits)


class AnnotatedLine(BaseModel):
    """A line with its alliterating words marked by hand.

    Attributes:
        tokens: Tokens in line order, caesura included
        marks: One flag per word token
    """

    tokens: list[Token]
    marks: list[bool]

    @model_validator(mode="after")
    def _aligned(self) -> "AnnotatedLine":
        if len(self.marks) != len(self.words):
            raise ValueError(
                f"{len(self.marks)} marks for {len(self.words)} word tokens"
            )
        return self

    @property
    def words(self) -> list[Token]:
        """Word tokens, caesura excluded."""
        return [t for t in self.tokens if not t.is_caesura]

    @property
    def position_string(self) -> PositionString:
        """Position string read directly from the marks."""
        return PositionString(bits="".join("1" if m else "0" for m in self.marks))


def meter_pattern_problem(text: str) -> str | None:
    """Describe what is wrong with a meter pattern, or None if it is valid."""
    for i, ch in enumerate(text):
        if ch != CAESURA and ch not in METER_SYMBOLS:
            return f"invalid symbol {ch!r} at position {i + 1} in {text!r}"
    slashes = text.count(CAESURA)
    if slashes != 1:
        return f"expected exactly one '/', found {slashes} in {text!r}"
    a_verse, b_verse = text.split(CAESURA)
    if not a_verse or not b_verse:
        return f"empty half-line in {text!r}"
    return None


class MeterPattern(BaseModel):
    """Oakden-style stress pattern such as ``aa/ax``."""

    model_config = ConfigDict(frozen=True)

    text: str

    @model_validator(mode="after")
    def _valid(self) -> "MeterPattern":
        problem = meter_pattern_problem(self.text)
        if problem:
            raise ValueError(problem)
        return self

    @property
    def a_verse(self) -> str:
        return self.text.split(CAESURA)[0]

    @property
    def b_verse(self) -> str:
        return self.text.split(CAESURA)[1]

    def __str__(self) -> str:
        return self.text
