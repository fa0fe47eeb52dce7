"""Command line interface for versevar."""
