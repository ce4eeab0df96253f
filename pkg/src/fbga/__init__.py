"""Biserial fractional Brauer graph toolkit."""

__version__ = "0.1.0"
