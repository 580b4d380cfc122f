"""Exact Kostka numbers, LR coefficients and Schur volume functions for small Lie algebras."""

__version__ = "0.1.0"
