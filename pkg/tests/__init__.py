"""Tests for versevar."""
