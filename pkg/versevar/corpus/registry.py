"""Registry of the golden fixtures shipped with versevar.

Fixtures are parsed from ``versevar/corpus/data`` on first use and cached
for the lifetime of the registry.
"""

from dataclasses import dataclass
from functools import lru_cache
from importlib import resources

import structlog

from shared.schemas import CountTable, DistanceMatrix, Fixture, FixtureKind
from versevar.errors import UnknownFixtureError

from .ingest import parse_codes, parse_counts, parse_poem

logger = structlog.get_logger()


@dataclass(frozen=True)
class FixtureSpec:
    """Where a fixture lives and how to parse it.

    Attributes:
        kind: Payload kind
        filename: File under the package data directory
        provenance: Source of the numbers
        labels_from: Fixture whose items label the matrix rows
    """

    kind: FixtureKind
    filename: str
    provenance: str
    labels_from: str | None = None


FIXTURES: dict[str, FixtureSpec] = {
    "figure1_lines": FixtureSpec(
        FixtureKind.LINES,
        "figure1_lines.txt",
        "Piers Plowman B-text, Prologue lines 1-10, alliterating words bolded, caesurae marked",
    ),
    "figure1_codes_variant_a": FixtureSpec(
        FixtureKind.CODES,
        "figure1_codes_variant_a.txt",
        "Position strings of the Prologue lines 1-10, every word with the alliterating sound",
    ),
    "figure1_codes_variant_b": FixtureSpec(
        FixtureKind.CODES,
        "figure1_codes_variant_b.txt",
        "Position strings of the Prologue lines 1-10, stressed alliterating words only",
    ),
    "figure2_matrix": FixtureSpec(
        FixtureKind.MATRIX,
        "figure2_matrix.csv",
        "Edit distances between the ten stressed-word position strings",
        labels_from="figure1_codes_variant_b",
    ),
    "figure7_matrix": FixtureSpec(
        FixtureKind.MATRIX,
        "figure7_matrix.csv",
        "Edit distances between the 16 Oakden meter patterns; the aa/bb row is "
        "recomputed because its printed copy is not symmetric",
        labels_from="table1_combined",
    ),
    "table1_sggk": FixtureSpec(
        FixtureKind.COUNTS,
        "table1_sggk.tsv",
        "Oakden meter counts for Sir Gawain and the Green Knight, complex groups dropped",
    ),
    "table1_ppb": FixtureSpec(
        FixtureKind.COUNTS,
        "table1_ppb.tsv",
        "Oakden meter counts for Piers Plowman B, back-converted from percentages, "
        "complex groups dropped",
    ),
    "table1_combined": FixtureSpec(
        FixtureKind.COUNTS,
        "table1_combined.tsv",
        "Sum of the Sir Gawain and Piers Plowman B meter counts",
    ),
}


class FixtureRegistry:
    """Lookup of shipped fixtures by name."""

    def __init__(self, specs: dict[str, FixtureSpec] | None = None) -> None:
        """Initialize the registry.

        Args:
            specs: Fixture table; the shipped set if None
        """
        self._specs = dict(FIXTURES if specs is None else specs)
        self._loaded: dict[str, Fixture] = {}

    def names(self) -> list[str]:
        """Fixture names in registration order."""
        return list(self._specs)

    def provenance(self, name: str) -> str:
        return self._spec(name).provenance

    def get(self, name: str) -> Fixture:
        """Load and validate a fixture.

        Raises:
            UnknownFixtureError: if no fixture has this name
        """
        if name not in self._loaded:
            self._loaded[name] = self._load(name)
        return self._loaded[name]

    def all(self) -> list[Fixture]:
        return [self.get(name) for name in self._specs]

    def _spec(self, name: str) -> FixtureSpec:
        try:
            return self._specs[name]
        except KeyError:
            raise UnknownFixtureError(name, self.names())

    def _load(self, name: str) -> Fixture:
        spec = self._spec(name)
        text = resources.files("versevar.corpus").joinpath("data", spec.filename).read_text("utf-8")
        source = f"fixture:{name}"

        payload: list[str] | DistanceMatrix | CountTable
        if spec.kind == FixtureKind.LINES:
            payload = parse_poem(text, source).lines
        elif spec.kind == FixtureKind.CODES:
            payload = parse_codes(text, source)
        elif spec.kind == FixtureKind.MATRIX:
            labels = self.items(spec.labels_from) if spec.labels_from else None
            payload = DistanceMatrix.from_csv(text, labels=labels)
        else:
            payload = parse_counts(text, source)

        logger.debug("fixture_loaded", name=name, kind=spec.kind.value)
        return Fixture(name=name, kind=spec.kind, payload=payload, provenance=spec.provenance)

    def items(self, name: str) -> list[str]:
        """Symbol strings of a fixture: lines, codes, or count-table patterns.

        Raises:
            UnknownFixtureError: if no fixture has this name
            ValueError: for matrix fixtures
        """
        payload = self.get(name).payload
        if isinstance(payload, list):
            return list(payload)
        if isinstance(payload, DistanceMatrix):
            raise ValueError(f"fixture {name!r} holds a matrix, not items")
        return payload.patterns


@lru_cache
def default_registry() -> FixtureRegistry:
    return FixtureRegistry()


def load_fixture(name: str) -> Fixture:
    """Load a shipped fixture by name.

    Raises:
        UnknownFixtureError: listing the available names
    """
    return default_registry().get(name)
