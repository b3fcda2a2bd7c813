"""
q-Binomial Coefficients
"""

import logging

from qfactors.exact.laurent import LaurentPoly

logger = logging.getLogger(__name__)


def _q_factorial(n: int) -> LaurentPoly:
    """(q;q)_n"""
    value = LaurentPoly.one()
    for j in range(1, n + 1):
        value = value.times_binomial(j)
    return value


def q_binomial(n: int, k: int, base_step: int = 1) -> LaurentPoly:
    """
    The q-binomial coefficient [n choose k] in base q^base_step

    Args:
        n: Nonnegative integer
        k: Any integer; outside [0, n] the coefficient is zero
        base_step: Substitute q -> q^base_step in the result

    Returns:
        LaurentPoly: (q;q)_n / ((q;q)_k (q;q)_(n-k)), computed by exact division
    """
    if n < 0:
        raise ValueError(f"q-binomial needs n >= 0, got {n}")
    if base_step < 1:
        raise ValueError(f"base step must be positive, got {base_step}")
    if k < 0 or k > n:
        return LaurentPoly.zero()
    value = _q_factorial(n).exact_divide(_q_factorial(k) * _q_factorial(n - k))
    return value.substitute(base_step) if base_step != 1 else value
