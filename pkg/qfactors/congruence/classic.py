"""
Classical Checks

The p-adic supercongruence for sum binom(2k,k)^2 / 16^k, its q-analogue
modulo Phi_n(q)^2, and the residue <x>_n used to filter the step-3m
conjecture families.
"""

import logging
import time
from fractions import Fraction
from math import comb
from typing import Union

from sympy import isprime

from qfactors.exact.laurent import LaurentPoly
from qfactors.exact.quotient import ModulusKind
from qfactors.qfun.moduli import build_modulus
from qfactors.series.catalog import family_gz_rv
from qfactors.series.summation import PartialSum, accumulate
from qfactors.congruence.checker import divides_exact
from qfactors.congruence.report import CongruenceReport, Engine, Verdict

logger = logging.getLogger(__name__)


def padic_rv_sum(p: int) -> int:
    """
    sum_{k<p} binom(2k,k)^2 / 16^k reduced modulo p^2

    Raises:
        ValueError: Unless p is an odd prime
    """
    if p == 2 or not isprime(p):
        raise ValueError(f"p must be an odd prime, got {p}")
    modulus = p * p
    inv16 = pow(16, -1, modulus)
    return sum(comb(2 * k, k) ** 2 * pow(inv16, k, modulus) for k in range(p)) % modulus


def padic_rv_check(p: int) -> bool:
    """True when the sum is congruent to (-1)^((p-1)/2) modulo p^2"""
    return padic_rv_sum(p) == (-1) ** ((p - 1) // 2) % (p * p)


def check_padic_rv(p: int) -> CongruenceReport:
    """Report form of padic_rv_check; the witness is the residue of the difference"""
    started = time.perf_counter()
    difference = (padic_rv_sum(p) - (-1) ** ((p - 1) // 2)) % (p * p)
    return CongruenceReport.with_witness(
        LaurentPoly.constant(difference),
        family="padic-rv",
        params={"n": p},
        modulus_label=f"p^2({p})",
        engine=Engine.EXACT,
        elapsed_ms=round((time.perf_counter() - started) * 1000, 3),
    )


def _gz_rv_partial(n: int) -> PartialSum:
    """The sum minus (-1)^((n-1)/2) q^((1-n^2)/4), over the same denominator"""
    if n < 3 or n % 2 == 0:
        raise ValueError(f"n must be odd and at least 3, got {n}")
    partial = accumulate(family_gz_rv(), n)
    value = LaurentPoly.monomial((1 - n * n) // 4, (-1) ** ((n - 1) // 2))
    return PartialSum(
        partial.numerator - value * partial.denominator,
        partial.den_exponents,
        partial.terms,
        partial.last_index,
    )


def check_gz_rv(n: int, kind: ModulusKind = ModulusKind.PHI_POW) -> CongruenceReport:
    """Report form of the q-analogue check modulo Phi_n(q)^2 or [n]^2"""
    started = time.perf_counter()
    partial = _gz_rv_partial(n)
    modulus = build_modulus(kind, n, 2)
    remainder, shift, message = divides_exact(partial, modulus)
    fields = dict(
        family="gz-rv",
        params={"n": n, "truncation": "upto_n_minus_1"},
        modulus_label=modulus.label,
        engine=Engine.EXACT,
        elapsed_ms=round((time.perf_counter() - started) * 1000, 3),
    )
    if remainder is None:
        return CongruenceReport(verdict=Verdict.NOT_APPLICABLE, message=message, **fields)
    return CongruenceReport.with_witness(remainder, q_shift=shift, **fields)


def gz_rv_check(n: int) -> bool:
    """
    sum_{k<n} (q;q^2)_k^2 / (q^2;q^2)_k^2 == (-1)^((n-1)/2) q^((1-n^2)/4)
    modulo Phi_n(q)^2, and modulo [n]^2 as well when n is prime

    Raises:
        ValueError: Unless n is odd and at least 3
    """
    kinds = [ModulusKind.PHI_POW]
    if isprime(n):
        kinds.append(ModulusKind.QINT_SQ)
    return all(check_gz_rv(n, kind).verdict is Verdict.PASS for kind in kinds)


def residue_mod(x: Union[int, Fraction, str], n: int) -> int:
    """
    The least nonnegative residue <x>_n of a rational x

    >>> residue_mod(Fraction(1, 3), 5)
    2

    Raises:
        ValueError: If n < 1 or the denominator of x shares a factor with n
    """
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    x = Fraction(x)
    try:
        inv = pow(x.denominator, -1, n)
    except ValueError:
        raise ValueError(f"denominator of {x} shares a factor with {n}")
    return x.numerator * inv % n


def conj56_window_ok(m: int, r: int, n: int, sign: int) -> bool:
    """
    Whether (m, r, n) meets the hypotheses of the step-3m conjectures:
    gcd(3m, n) = 1 and 0 < <r/3m>_n <= (2n-1)/3 for sign +1, (2n-5)/3 for sign -1
    """
    try:
        t = residue_mod(Fraction(r, 3 * m), n)
    except ValueError:
        return False
    bound = 2 * n - 1 if sign == 1 else 2 * n - 5
    return 0 < t and 3 * t <= bound
