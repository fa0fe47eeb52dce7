"""Exception types raised by versevar.

All of them derive from ValueError so callers that only care about bad input
can catch that.
"""


class VersevarError(ValueError):
    """Base class for data errors."""


class EmptyDatasetError(VersevarError):
    """Raised when an operation needs at least one item."""

    def __init__(self, message: str = "empty dataset") -> None:
        super().__init__(message)


class DegenerateSampleError(VersevarError):
    """Raised when a variance ratio would divide by a zero variance."""

    def __init__(self, message: str = "degenerate sample") -> None:
        super().__init__(message)


class AlignmentError(VersevarError):
    """Raised when counts, matrices or split sizes disagree in length."""


class PatternError(VersevarError):
    """Raised for malformed meter patterns."""


class ParseError(VersevarError):
    """Raised for malformed annotated or tabular input.

    Attributes:
        line: 1-based line number, when known
        column: 1-based column number, when known
    """

    def __init__(self, message: str, line: int | None = None, column: int | None = None) -> None:
        self.line = line
        self.column = column
        where = []
        if line is not None:
            where.append(f"line {line}")
        if column is not None:
            where.append(f"column {column}")
        super().__init__(f"{message} ({', '.join(where)})" if where else message)


class SoundClassError(VersevarError):
    """Raised when a word starts with a character no rule covers."""

    def __init__(self, char: str, word: str) -> None:
        self.char = char
        self.word = word
        super().__init__(f"unclassifiable character {char!r} in {word!r}")


class CodingError(VersevarError):
    """Raised when a line cannot be coded."""


class UnknownFixtureError(VersevarError):
    """Raised for fixture names outside the shipped set."""

    def __init__(self, name: str, available: list[str]) -> None:
        self.name = name
        self.available = available
        super().__init__(f"unknown fixture {name!r}; available: {', '.join(available)}")


class IngestError(VersevarError):
    """Raised when a poem or table file cannot be read."""
