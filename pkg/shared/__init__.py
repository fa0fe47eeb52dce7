"""Shared data models for versevar."""
