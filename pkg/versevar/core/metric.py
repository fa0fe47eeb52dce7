"""Edit distance and pairwise distance matrices.

Distances are unit-cost Levenshtein distances (insert, delete, substitute;
no transpositions) over symbols compared after NFC normalization.
"""

import unicodedata
from collections.abc import Sequence
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from functools import partial

import Levenshtein
import structlog

from shared.schemas import DistanceMatrix
from versevar.errors import EmptyDatasetError

logger = structlog.get_logger()

# A string of one-character symbols, or an explicit sequence of symbols
SymbolSequence = str | Sequence[str]


def normalize_symbols(seq: SymbolSequence) -> str | tuple[str, ...]:
    """NFC-normalize a symbol sequence so equal letters compare equal."""
    if isinstance(seq, str):
        return unicodedata.normalize("NFC", seq)
    return tuple(unicodedata.normalize("NFC", sym) for sym in seq)


def edit_distance(s: SymbolSequence, t: SymbolSequence) -> int:
    """Minimum number of unit-cost edits turning ``s`` into ``t``.

    Args:
        s: First sequence (may be empty)
        t: Second sequence (may be empty)

    Returns:
        The Levenshtein distance
    """
    a, b = normalize_symbols(s), normalize_symbols(t)
    if isinstance(a, str) != isinstance(b, str):
        a, b = tuple(a), tuple(b)
    return int(Levenshtein.distance(a, b))


def _upper_row(i: int, items: Sequence[SymbolSequence]) -> list[int]:
    return [edit_distance(items[i], items[j]) for j in range(i + 1, len(items))]


def distance_matrix(
    items: Sequence[SymbolSequence],
    labels: Sequence[str] | None = None,
    workers: int = 1,
) -> DistanceMatrix:
    """Pairwise edit distances between all items.

    Only the upper triangle is computed; it is mirrored into the lower one.

    Args:
        items: Symbol sequences, at least one
        labels: Optional row labels (defaults to the items when they are strings)
        workers: Process pool size for row computation; 1 runs inline

    Raises:
        EmptyDatasetError: if items is empty
    """
    n = len(items)
    if n == 0:
        raise EmptyDatasetError()

    normalized = [normalize_symbols(item) for item in items]
    if workers > 1 and n > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            upper = list(pool.map(partial(_upper_row, items=normalized), range(n)))
    else:
        upper = [_upper_row(i, normalized) for i in range(n)]

    entries = [[0] * n for _ in range(n)]
    for i, row in enumerate(upper):
        for offset, d in enumerate(row):
            j = i + 1 + offset
            entries[i][j] = entries[j][i] = d

    if labels is None and all(isinstance(item, str) for item in normalized):
        labels = [str(item) for item in normalized]

    logger.debug("distance_matrix_built", n=n, workers=workers)
    return DistanceMatrix(
        entries=tuple(tuple(row) for row in entries),
        labels=tuple(labels) if labels is not None else None,
    )


def row_profile(matrix: DistanceMatrix) -> tuple[list[Fraction], Fraction]:
    """Average distance of each row to all items, and the matrix average.

    Rows far above the overall average flag lines unlike the rest of a poem.
    """
    n = matrix.n
    row_means = [Fraction(sum(row), n) for row in matrix.entries]
    overall = Fraction(sum(sum(row) for row in matrix.entries), n * n)
    return row_means, overall
