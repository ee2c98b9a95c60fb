"""Exact Hankel determinant identities for Catalan-family sequences and their q-analogues."""

__version__ = "0.1.0"
