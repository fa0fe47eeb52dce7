"""Line tokenization, alliteration coding and annotation parsing.

Two routes produce position strings. Hand-annotated lines (alliterating
words wrapped in asterisks) are authoritative; raw lines are auto-coded
from initial-sound classes, which is a best-effort heuristic.
"""

import re
import unicodedata
from collections import Counter
from collections.abc import Iterable, Sequence

import structlog

from shared.schemas import (
    AnnotatedLine,
    CodingVariant,
    MeterPattern,
    PositionString,
    SoundClass,
    Token,
)
from shared.schemas.coding import CAESURA, meter_pattern_problem
from versevar.errors import CodingError, ParseError, PatternError, SoundClassError

from .lexicon import Lexicon, load_lexicon
from .phonology import initial_sound_class

logger = structlog.get_logger()

PUNCTUATION = ",.;:!?\"'“”‘’()[]"
MARK = "*"

_CHUNK = re.compile(r"\S+")


def _word_token(surface: str) -> Token | None:
    word = surface.strip(PUNCTUATION)
    if not word:
        return None
    return Token(surface=word, normalized=unicodedata.normalize("NFC", word.lower()))


def _caesura() -> Token:
    return Token(surface=CAESURA, is_caesura=True)


def tokenize(line: str) -> list[Token]:
    """Split a line into word tokens and caesura marks.

    Words are whitespace-separated; surrounding punctuation is stripped and
    chunks left empty are dropped.
    """
    tokens = []
    for chunk in line.split():
        if chunk == CAESURA:
            tokens.append(_caesura())
            continue
        token = _word_token(chunk)
        if token is not None:
            tokens.append(token)
    return tokens


def alliterating_class(words: Sequence[Token], lexicon: Lexicon) -> SoundClass:
    """Most frequent initial class among the line's content words.

    Ties go to the class seen first. Lines made only of function words fall
    back to counting every word.
    """
    content = [w for w in words if not lexicon.is_function_word(w.normalized)]
    pool = content or list(words)
    classes = [initial_sound_class(w.normalized) for w in pool]
    counts = Counter(classes)
    best = max(counts.values())
    return next(c for c in classes if counts[c] == best)


def _stem_matches(word: str, target: SoundClass, prefixes: Sequence[str], min_stem: int) -> bool:
    for prefix in prefixes:
        stem = word[len(prefix):]
        if not word.startswith(prefix) or len(stem) < min_stem:
            continue
        try:
            if initial_sound_class(stem) == target:
                return True
        except SoundClassError:
            continue
    return False


def auto_code_line(
    tokens: Sequence[Token],
    variant: CodingVariant,
    lexicon: Lexicon | None = None,
    a_verse_max_staves: int | None = 2,
    min_prefix_stem: int = 3,
) -> PositionString:
    """Code a tokenized line as a position string.

    Variant A marks every word whose initial class is the line's
    alliterating class. Variant B marks only content words, also accepting
    words whose stem matches once an unstressed prefix is removed, and keeps
    at most ``a_verse_max_staves`` marks before the caesura (the leftmost
    extras are dropped).

    Args:
        tokens: Output of tokenize
        variant: Coding variant
        lexicon: Stop words and prefixes; the configured lexicon if None
        a_verse_max_staves: Variant B limit on a-verse marks; None disables it
        min_prefix_stem: Shortest stem accepted after removing a prefix

    Returns:
        One bit per word token

    Raises:
        CodingError: if the line has no words
        SoundClassError: if a word cannot be classified
    """
    words = [t for t in tokens if not t.is_caesura]
    if not words:
        raise CodingError("line has no words")
    if lexicon is None:
        lexicon = load_lexicon()

    target = alliterating_class(words, lexicon)
    classes = [initial_sound_class(w.normalized) for w in words]

    if variant == CodingVariant.A:
        marks = [c == target for c in classes]
    else:
        marks = [
            not lexicon.is_function_word(w.normalized)
            and (c == target or _stem_matches(w.normalized, target, lexicon.prefixes, min_prefix_stem))
            for w, c in zip(words, classes)
        ]
        caesura_at = next((i for i, t in enumerate(tokens) if t.is_caesura), None)
        if a_verse_max_staves is not None and caesura_at is not None:
            # every token before the first caesura is a word
            a_marked = [i for i in range(caesura_at) if marks[i]]
            for i in a_marked[: max(0, len(a_marked) - a_verse_max_staves)]:
                marks[i] = False

    return PositionString(bits="".join("1" if m else "0" for m in marks))


def parse_annotated_line(text: str, line_number: int | None = None) -> AnnotatedLine:
    """Parse a line whose alliterating words are wrapped in asterisks.

    Example: ``In a *somer* *seson* / whan *softe* was the *sonne*``.
    Punctuation may sit outside the asterisks (``*sonne*,``).

    Raises:
        ParseError: on an unbalanced or empty mark, with its 1-based column
    """
    tokens: list[Token] = []
    marks: list[bool] = []
    for match in _CHUNK.finditer(text):
        chunk = match.group()
        if chunk == CAESURA:
            tokens.append(_caesura())
            continue

        if MARK not in chunk:
            token = _word_token(chunk)
            if token is not None:
                tokens.append(token)
                marks.append(False)
            continue

        core = chunk.strip(PUNCTUATION)
        inner = core[1:-1]
        well_formed = (
            len(core) > 2
            and core.startswith(MARK)
            and core.endswith(MARK)
            and MARK not in inner
        )
        token = _word_token(inner) if well_formed else None
        if token is None:
            column = match.start() + chunk.index(MARK) + 1
            raise ParseError("unbalanced asterisk", line=line_number, column=column)
        tokens.append(token)
        marks.append(True)

    return AnnotatedLine(tokens=tokens, marks=marks)


def render_annotated(line: AnnotatedLine) -> str:
    """Write an annotated line back in asterisk notation."""
    marks = iter(line.marks)
    parts = []
    for token in line.tokens:
        if token.is_caesura:
            parts.append(CAESURA)
        elif next(marks):
            parts.append(f"{MARK}{token.surface}{MARK}")
        else:
            parts.append(token.surface)
    return " ".join(parts)


def is_annotated(text: str) -> bool:
    return MARK in text


def parse_meter_pattern(text: str) -> MeterPattern:
    """Validate an Oakden meter pattern such as ``aa/ax``.

    Raises:
        PatternError: on symbols outside {a, b, x, /}, a slash count other
            than one, or an empty half-line
    """
    pattern = text.strip()
    problem = meter_pattern_problem(pattern)
    if problem:
        raise PatternError(problem)
    return MeterPattern(text=pattern)


def code_poem(
    lines: Iterable[str],
    variant: CodingVariant,
    lexicon: Lexicon | None = None,
    a_verse_max_staves: int | None = 2,
    min_prefix_stem: int = 3,
    annotated: bool | None = None,
) -> list[PositionString]:
    """Code every line of a poem.

    The mode is decided once for the whole poem. In annotated mode every
    line is read through its asterisk marks, so a line without marks codes
    as all zeros. Otherwise every line is auto-coded with the given variant
    and any asterisks are ignored.

    Args:
        annotated: True or False forces the mode; None picks annotated mode
            when any line carries a mark
    """
    lines = list(lines)
    if annotated is None:
        annotated = any(is_annotated(text) for text in lines)

    if annotated:
        codes = [
            parse_annotated_line(text, line_number=number).position_string
            for number, text in enumerate(lines, start=1)
        ]
        logger.debug("poem_coded", lines=len(codes), mode="annotated")
        return codes

    if lexicon is None:
        lexicon = load_lexicon()

    codes = []
    for number, text in enumerate(lines, start=1):
        try:
            codes.append(
                auto_code_line(
                    tokenize(text.replace(MARK, "")),
                    variant,
                    lexicon=lexicon,
                    a_verse_max_staves=a_verse_max_staves,
                    min_prefix_stem=min_prefix_stem,
                )
            )
        except (CodingError, SoundClassError) as e:
            raise CodingError(f"{e} (line {number})") from e

    logger.debug("poem_coded", lines=len(codes), mode="auto", variant=variant.value)
    return codes
