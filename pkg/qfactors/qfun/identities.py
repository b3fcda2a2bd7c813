"""
Product and Summation Identities

Finite checks of the classical identities behind the congruences: the
cyclotomic factorizations of q^n - 1 and [n], the divisibility of Phi_n(q^m)
by Phi_n(q), and the vanishing form of the finite q-binomial theorem.
"""

import logging
from math import comb, gcd

from sympy import divisors

from qfactors.exact.laurent import LaurentPoly
from qfactors.qfun.binomial import q_binomial
from qfactors.qfun.cyclotomic import cyclotomic, q_integer

logger = logging.getLogger(__name__)


def qbino_identity_check(n: int, j: int) -> bool:
    """
    Check sum_{k=0}^{n} (-1)^k [n choose k] q^(C(n-k,2) + j*k) == 0

    Args:
        n: Positive integer
        j: Integer with 0 <= j <= n-1

    Returns:
        bool: True when the sum is the zero polynomial

    Raises:
        ValueError: If j lies outside [0, n-1], where the identity is not claimed
    """
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    if not 0 <= j <= n - 1:
        raise ValueError(f"j must satisfy 0 <= j <= {n - 1}, got {j}")
    total = LaurentPoly.zero()
    for k in range(n + 1):
        term = q_binomial(n, k).shift(comb(n - k, 2) + j * k)
        total = total - term if k % 2 else total + term
    if not total.is_zero():
        logger.warning(f"q-binomial vanishing failed at n={n}, j={j}: {total}")
    return total.is_zero()


def cyclotomic_product_identity(n: int) -> bool:
    """prod_{d | n} Phi_d(q) == q^n - 1"""
    product = LaurentPoly.one()
    for d in divisors(n):
        product = product * cyclotomic(d)
    return product == LaurentPoly.monomial(n) - 1


def qint_product_identity(n: int) -> bool:
    """prod_{d | n, d > 1} Phi_d(q) == [n]"""
    product = LaurentPoly.one()
    for d in divisors(n)[1:]:
        product = product * cyclotomic(d)
    return product == q_integer(n)


def cyclotomic_substitution_divides(n: int, m: int) -> bool:
    """
    Check that Phi_n(q) divides Phi_n(q^m)

    Raises:
        ValueError: If gcd(m, n) != 1, where the divisibility is not claimed
    """
    if m < 1 or gcd(m, n) != 1:
        raise ValueError(f"need a positive m coprime to n, got m={m}, n={n}")
    return cyclotomic(n).substitute(m).is_divisible_by(cyclotomic(n))
