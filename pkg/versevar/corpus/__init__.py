"""Shipped golden fixtures and ingestion of user poems and count tables."""

from .ingest import (
    ingest_poem,
    parse_codes,
    parse_counts,
    parse_poem,
    read_codes,
    read_counts,
    write_counts,
)
from .registry import FIXTURES, FixtureRegistry, FixtureSpec, default_registry, load_fixture

__all__ = [
    "FIXTURES",
    "FixtureRegistry",
    "FixtureSpec",
    "default_registry",
    "load_fixture",
    "ingest_poem",
    "parse_poem",
    "parse_codes",
    "read_codes",
    "parse_counts",
    "read_counts",
    "write_counts",
]
