"""Core statistics for versevar: distances, generalized variances, permutation tests."""

from .config import Settings, configure_logging, get_settings
from .frechet import frechet_summary, tabulate, variance_ratio, weighted_frechet
from .metric import distance_matrix, edit_distance, row_profile
from .permtest import (
    counts_permutation_test,
    empirical_p,
    line_permutation_test,
    permute_split,
    resample_generator,
)

__all__ = [
    "Settings",
    "configure_logging",
    "get_settings",
    "edit_distance",
    "distance_matrix",
    "row_profile",
    "frechet_summary",
    "weighted_frechet",
    "variance_ratio",
    "tabulate",
    "permute_split",
    "empirical_p",
    "line_permutation_test",
    "counts_permutation_test",
    "resample_generator",
]
