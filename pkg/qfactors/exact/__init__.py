"""
Exact arithmetic module: rationals, Laurent polynomials, rational functions
and quotient-ring residues
"""

from qfactors.exact.laurent import LaurentPoly, NotDivisibleError
from qfactors.exact.ratfun import RatFun
from qfactors.exact.quotient import (
    Modulus,
    ModulusKind,
    NotAUnitError,
    QuotientElem,
    quotient_project,
)

__all__ = [
    "LaurentPoly",
    "NotDivisibleError",
    "RatFun",
    "Modulus",
    "ModulusKind",
    "NotAUnitError",
    "QuotientElem",
    "quotient_project",
]
