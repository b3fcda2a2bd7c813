"""
q-Series Factors - command-line entry point

Checks truncated basic hypergeometric sums for divisibility by cyclotomic
polynomials, q-integers and their products.

    python main.py verify --family main --d 3 --r 1 --n-max 20
    python main.py scan --family conj3 --n-max 31
"""

# .env is loaded by main() before QFACTORS_* settings are read
from qfactors.cli.commands import main

if __name__ == "__main__":
    raise SystemExit(main())
