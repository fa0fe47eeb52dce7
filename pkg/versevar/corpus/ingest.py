"""Reading poems, code lists and count tables from disk.

Poem files are UTF-8 with one poetic line per text line. Lines starting
with ``#`` (comments and ``#skip`` directives) and blank lines are dropped;
callers may also drop explicit line ranges, such as Latin lines or
bob-and-wheel sections.
"""

from collections.abc import Sequence
from pathlib import Path

import structlog

from shared.schemas import CountTable, IngestedPoem
from versevar.coding import parse_meter_pattern
from versevar.errors import IngestError, ParseError, PatternError

logger = structlog.get_logger()

COMMENT = "#"


def _read_text(path: Path) -> str:
    try:
        data = path.read_bytes()
    except OSError as e:
        raise IngestError(f"cannot read {path}: {e.strerror or e}")
    try:
        return data.decode("utf-8")
    except UnicodeDecodeError as e:
        line = data[: e.start].count(b"\n") + 1
        raise IngestError(f"{path}: invalid UTF-8 at line {line}")


def _in_ranges(number: int, ranges: Sequence[tuple[int, int]]) -> bool:
    return any(lo <= number <= hi for lo, hi in ranges)


def parse_poem(
    text: str,
    source: str,
    skip_ranges: Sequence[tuple[int, int]] | None = None,
    keep_first: int | None = None,
) -> IngestedPoem:
    """Apply skip directives to poem text.

    Args:
        text: File contents
        source: Name reported in errors and in the result
        skip_ranges: 1-based inclusive file line ranges to drop
        keep_first: Keep only this many lines after the other skips

    Raises:
        IngestError: if no lines survive
    """
    ranges = list(skip_ranges or [])
    lines: list[str] = []
    numbers: list[int] = []
    skipped = 0
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith(COMMENT) or _in_ranges(number, ranges):
            skipped += 1
            continue
        lines.append(line)
        numbers.append(number)

    if keep_first is not None and len(lines) > keep_first:
        skipped += len(lines) - keep_first
        lines, numbers = lines[:keep_first], numbers[:keep_first]

    if not lines:
        raise IngestError(f"no lines in {source}")

    logger.debug("poem_ingested", source=source, kept=len(lines), skipped=skipped)
    return IngestedPoem(source=source, lines=lines, line_numbers=numbers, skipped=skipped)


def ingest_poem(
    path: Path,
    skip_ranges: Sequence[tuple[int, int]] | None = None,
    keep_first: int | None = None,
) -> IngestedPoem:
    """Read a poem file, raw or annotated. See parse_poem."""
    return parse_poem(_read_text(path), str(path), skip_ranges, keep_first)


def parse_codes(text: str, source: str) -> list[str]:
    """One symbol string per line; comments and blank lines ignored."""
    codes = [
        line.strip()
        for line in text.splitlines()
        if line.strip() and not line.strip().startswith(COMMENT)
    ]
    if not codes:
        raise IngestError(f"no lines in {source}")
    return codes


def read_codes(path: Path) -> list[str]:
    return parse_codes(_read_text(path), str(path))


def parse_counts(text: str, source: str) -> CountTable:
    """Parse a ``pattern<TAB>count`` table.

    Raises:
        ParseError: on malformed rows, invalid patterns or repeated patterns
        IngestError: if the table has no rows
    """
    pairs: list[tuple[str, int]] = []
    seen: set[str] = set()
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith(COMMENT):
            continue
        fields = line.split("\t") if "\t" in line else line.split()
        if len(fields) != 2:
            raise ParseError(f"{source}: expected pattern and count", line=number)
        try:
            pattern = parse_meter_pattern(fields[0]).text
        except PatternError as e:
            raise ParseError(f"{source}: {e}", line=number)
        try:
            count = int(fields[1])
        except ValueError:
            raise ParseError(f"{source}: count {fields[1].strip()!r} is not an integer", line=number)
        if count < 0:
            raise ParseError(f"{source}: negative count", line=number)
        if pattern in seen:
            raise ParseError(f"{source}: pattern {pattern!r} repeated", line=number)
        seen.add(pattern)
        pairs.append((pattern, count))

    if not pairs:
        raise IngestError(f"no rows in {source}")
    return CountTable.from_pairs(pairs)


def read_counts(path: Path) -> CountTable:
    return parse_counts(_read_text(path), str(path))


def write_counts(table: CountTable, path: Path) -> None:
    path.write_text(
        "".join(f"{row.pattern}\t{row.count}\n" for row in table.rows), encoding="utf-8"
    )
