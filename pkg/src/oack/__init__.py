"""Exact finite-dimensional calculus of orthogonally additive polynomials on C(K)."""

__version__ = "0.1.0"
