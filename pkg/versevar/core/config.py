"""Configuration management for versevar.

Uses Pydantic Settings for configuration with environment variable support.
"""

import logging
import sys
from functools import lru_cache
from pathlib import Path
from typing import Literal

import structlog
from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    """Application settings with environment variable support.

    All settings can be overridden via environment variables with VERSEVAR_ prefix.
    Example: VERSEVAR_N_RESAMPLES=5000
    """

    model_config = SettingsConfigDict(
        env_prefix="VERSEVAR_",
        env_file=".env",
        env_file_encoding="utf-8",
        case_sensitive=False,
    )

    # Resampling
    n_resamples: int = Field(default=1000, ge=1, description="Permutation resamples per test")
    workers: int = Field(default=1, ge=1, description="Process pool size for resampling")
    p_value_correction: bool = Field(
        default=False, description="Report (b+1)/(n+1) instead of the raw proportion"
    )

    # Generalized mean/variance
    power: int = Field(default=2, ge=1, description="Exponent applied to distances")
    weighting: Literal["paper", "conventional"] = Field(
        default="paper", description="Count weighting: paper or conventional"
    )

    # Coding
    variant: Literal["A", "B"] = Field(default="A", description="Position string variant: A or B")
    stopwords_path: Path | None = Field(default=None, description="Override stop-word lexicon")
    prefixes_path: Path | None = Field(default=None, description="Override prefix lexicon")
    a_verse_max_staves: int | None = Field(
        default=2, description="Marked words allowed before the caesura in variant B"
    )
    min_prefix_stem: int = Field(default=3, ge=1, description="Shortest stem left after a prefix")

    # Rendering
    histogram_bins: int = Field(default=20, ge=1, description="Default histogram bin count")

    # Logging
    log_level: str = Field(default="WARNING", description="Logging level")
    log_format: str = Field(default="console", description="Log format: json or console")


@lru_cache
def get_settings() -> Settings:
    """Get cached settings instance."""
    return Settings()


def configure_logging(settings: Settings | None = None) -> None:
    """Route structlog output to stderr at the configured level."""
    if settings is None:
        settings = get_settings()

    level = logging.getLevelName(settings.log_level.upper())
    if not isinstance(level, int):
        level = logging.WARNING

    renderer: structlog.typing.Processor
    if settings.log_format == "json":
        renderer = structlog.processors.JSONRenderer()
    else:
        renderer = structlog.dev.ConsoleRenderer(colors=False)

    structlog.configure(
        processors=[
            structlog.processors.add_log_level,
            structlog.processors.TimeStamper(fmt="iso"),
            renderer,
        ],
        wrapper_class=structlog.make_filtering_bound_logger(level),
        logger_factory=structlog.PrintLoggerFactory(file=sys.stderr),
        cache_logger_on_first_use=False,
    )
