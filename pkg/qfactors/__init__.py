"""
q-Series Factors Package

Exact construction of truncated basic hypergeometric sums and verification of
their divisibility by cyclotomic polynomials, q-integers and their products.
"""

__version__ = "0.1.0"
