"""Alliteration coding of Middle English lines."""

from .coder import (
    alliterating_class,
    auto_code_line,
    code_poem,
    is_annotated,
    parse_annotated_line,
    parse_meter_pattern,
    render_annotated,
    tokenize,
)
from .lexicon import Lexicon, load_lexicon
from .phonology import initial_sound_class

__all__ = [
    "Lexicon",
    "load_lexicon",
    "initial_sound_class",
    "tokenize",
    "alliterating_class",
    "auto_code_line",
    "parse_annotated_line",
    "render_annotated",
    "is_annotated",
    "parse_meter_pattern",
    "code_poem",
]
