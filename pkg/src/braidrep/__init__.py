"""Exact construction and classification of low-dimensional braid representations."""

__version__ = "0.1.0"
