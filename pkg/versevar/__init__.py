"""Generalized variances of coded poetic lines and permutation tests of their ratio."""

__version__ = "0.1.0"
