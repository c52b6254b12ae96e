"""Exact Klein pull-back coverings for algebraic Gauss hypergeometric equations."""

__version__ = "0.1.0"
