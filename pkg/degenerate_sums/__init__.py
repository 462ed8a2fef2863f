"""
The degenerate_sums package computes degenerate special numbers and
polynomials exactly and verifies finite-sum identities between them.
"""

__version__ = "0.20261018.0"
