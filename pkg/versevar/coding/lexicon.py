"""Editable word lists used by the line coder.

The shipped lists live in ``versevar/coding/data``; settings may point at
replacements. Files hold one entry per line, UTF-8, ``#`` starts a comment.
"""

import unicodedata
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources
from pathlib import Path

import structlog

from versevar.core.config import Settings, get_settings
from versevar.errors import IngestError

logger = structlog.get_logger()


@dataclass(frozen=True)
class Lexicon:
    """Stop words and unstressed prefixes.

    Attributes:
        stopwords: Function words, never stressed in variant B
        prefixes: Prefixes without hyphens, longest first
    """

    stopwords: frozenset[str]
    prefixes: tuple[str, ...]

    def is_function_word(self, normalized: str) -> bool:
        return normalized in self.stopwords


def parse_lexicon(text: str) -> list[str]:
    """Entries of a lexicon file, lowercased and NFC-normalized."""
    entries = []
    for raw in text.splitlines():
        entry = raw.split("#", 1)[0].strip()
        if entry:
            entries.append(unicodedata.normalize("NFC", entry.lower()))
    return entries


def _read(path: Path | None, packaged: str) -> list[str]:
    if path is None:
        text = resources.files("versevar.coding").joinpath("data", packaged).read_text("utf-8")
        return parse_lexicon(text)
    try:
        return parse_lexicon(path.read_text(encoding="utf-8"))
    except (OSError, UnicodeDecodeError) as e:
        raise IngestError(f"cannot read lexicon {path}: {e}")


@lru_cache(maxsize=8)
def _build(stopwords_path: Path | None, prefixes_path: Path | None) -> Lexicon:
    stopwords = frozenset(_read(stopwords_path, "stopwords.txt"))
    prefixes = tuple(
        sorted({p.strip("-") for p in _read(prefixes_path, "prefixes.txt")}, key=lambda p: (-len(p), p))
    )
    logger.debug("lexicon_loaded", stopwords=len(stopwords), prefixes=list(prefixes))
    return Lexicon(stopwords=stopwords, prefixes=prefixes)


def load_lexicon(settings: Settings | None = None) -> Lexicon:
    """Lexicon named by settings, falling back to the shipped lists."""
    if settings is None:
        settings = get_settings()
    return _build(settings.stopwords_path, settings.prefixes_path)
