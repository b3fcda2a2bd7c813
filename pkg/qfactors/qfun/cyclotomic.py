"""
Cyclotomic Polynomials and q-Integers

Phi_n(q) is computed by exact division of q^n - 1 by the Phi_d(q) of the
proper divisors d of n. Results are memoized for the whole process.
"""

import logging
from collections import Counter
from functools import lru_cache
from typing import Dict

from sympy import divisors

from qfactors.exact.laurent import LaurentPoly

logger = logging.getLogger(__name__)


@lru_cache(maxsize=None)
def cyclotomic(n: int) -> LaurentPoly:
    """
    The n-th cyclotomic polynomial Phi_n(q)

    Args:
        n: Positive integer

    Returns:
        LaurentPoly: Phi_n(q), integer coefficients, degree Euler phi(n)
    """
    if n < 1:
        raise ValueError(f"cyclotomic polynomial needs n >= 1, got {n}")
    result = LaurentPoly.monomial(n) - 1
    for d in divisors(n)[:-1]:
        result = result.exact_divide(cyclotomic(d))
    logger.debug(f"computed Phi_{n} of degree {result.degree()}")
    return result


@lru_cache(maxsize=None)
def q_integer(n: int) -> LaurentPoly:
    """The q-integer [n] = 1 + q + ... + q^(n-1)"""
    if n < 1:
        raise ValueError(f"q-integer needs n >= 1, got {n}")
    return LaurentPoly(0, (1,) * n)


def cyclotomic_factorization(exponent: int) -> Dict[int, int]:
    """
    Cyclotomic indices of the binomial 1 - q^exponent

    1 - q^e is, up to a sign and a power of q, the product of Phi_t(q) over
    the divisors t of |e|.
    """
    if exponent == 0:
        raise ValueError("1 - q^0 vanishes identically")
    return dict(Counter(divisors(abs(exponent))))
