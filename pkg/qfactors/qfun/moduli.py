"""
Modulus Construction

Builds the moduli the congruences are stated for: powers of Phi_n(q), the
q-integer [n], [n]*Phi_n(q) and [n]^2.
"""

import logging
from collections import Counter
from typing import Union

from sympy import divisors

from qfactors.exact.quotient import Modulus, ModulusKind
from qfactors.qfun.cyclotomic import cyclotomic, q_integer

logger = logging.getLogger(__name__)


def build_modulus(kind: Union[ModulusKind, str], n: int, exponent: int = 2) -> Modulus:
    """
    Build a named modulus

    Args:
        kind: One of phi_pow, qint, qint_phi, qint_sq
        n: The index n >= 2
        exponent: Power of Phi_n(q), used by phi_pow only

    Returns:
        Modulus: The polynomial with its cyclotomic factorization attached
    """
    kind = ModulusKind(kind)
    if n < 2:
        raise ValueError(f"moduli are defined for n >= 2, got {n}")
    factors: Counter = Counter()
    if kind is ModulusKind.PHI_POW:
        if exponent < 1:
            raise ValueError(f"exponent must be positive, got {exponent}")
        poly = cyclotomic(n) ** exponent
        factors[n] = exponent
    elif kind is ModulusKind.QINT:
        poly = q_integer(n)
        factors.update(divisors(n)[1:])
    elif kind is ModulusKind.QINT_PHI:
        poly = q_integer(n) * cyclotomic(n)
        factors.update(divisors(n)[1:])
        factors[n] += 1
    elif kind is ModulusKind.QINT_SQ:
        poly = q_integer(n) ** 2
        for t in divisors(n)[1:]:
            factors[t] = 2
    else:
        raise ValueError(f"cannot build a modulus of kind {kind.value}")
    return Modulus(
        poly=poly,
        kind=kind,
        n=n,
        exponent=exponent if kind is ModulusKind.PHI_POW else 1,
        factors=tuple(sorted(factors.items())),
    )
