"""Exact computations with quasi-invariant polynomials in three variables."""

__version__ = "0.1.0"
