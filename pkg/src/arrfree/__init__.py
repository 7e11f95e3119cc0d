"""Exact classification of central hyperplane arrangements in four variables."""

__version__ = "0.1.0"
