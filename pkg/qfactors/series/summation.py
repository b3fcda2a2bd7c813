"""
Summation Engines

Two ways of evaluating a truncated sum:

* the exact engine keeps one running common denominator (the k = T product of
  the denominator factors) and normalizes once at the end, cancelling
  cyclotomic factors instead of taking polynomial gcds;
* the quotient engine works term by term in Q[q]/(M), where every residue has
  degree below deg(M).
"""

import logging
from collections import Counter
from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Optional, Tuple

from qfactors.exact.laurent import LaurentPoly
from qfactors.exact.quotient import Modulus, QuotientElem
from qfactors.exact.ratfun import RatFun
from qfactors.qfun.cyclotomic import cyclotomic, cyclotomic_factorization
from qfactors.qfun.pochhammer import PochFactor, pochhammer_product
from qfactors.series.spec import SeriesSpec, SpecError

logger = logging.getLogger(__name__)


def _resolve(spec: SeriesSpec, a_power: Optional[int]) -> SeriesSpec:
    if spec.is_parametric():
        if a_power is None:
            raise SpecError(f"family {spec.family} depends on a; supply a = q^s to evaluate it")
        return spec.specialize(a_power)
    return spec


def _strip_cyclotomic(poly: LaurentPoly, t: int, limit: int) -> Tuple[LaurentPoly, int]:
    """Divide ``poly`` by Phi_t as often as possible, at most ``limit`` times"""
    if poly.is_zero():
        return poly, limit
    phi = cyclotomic(t)
    offset = poly.offset
    body = poly.unshifted()
    removed = 0
    while removed < limit:
        quotient, remainder = body.divmod(phi)
        if not remainder.is_zero():
            break
        body = quotient
        removed += 1
    return body.shift(offset), removed


@dataclass(frozen=True)
class PartialSum:
    """
    A truncated sum held as ``numerator / prod(1 - q^e)^count``

    Attributes:
        numerator: Accumulated numerator over the running common denominator
        den_exponents: Exponent e -> number of binomials 1 - q^e in the denominator
        terms: Number of summands that contributed (k = 0 .. terms-1)
        last_index: The truncation T the sum was asked for
    """

    numerator: LaurentPoly
    den_exponents: Dict[int, int] = field(default_factory=dict)
    terms: int = 1
    last_index: int = 0

    @property
    def denominator(self) -> LaurentPoly:
        """The running common denominator, expanded"""
        den = LaurentPoly.one()
        for exponent, count in sorted(self.den_exponents.items()):
            for _ in range(count):
                den = den.times_binomial(exponent)
        return den

    def is_zero(self) -> bool:
        return self.numerator.is_zero()

    def cyclotomic_content(self) -> Tuple[int, int, Counter]:
        """
        Split the denominator as ``sign * q^shift * prod(Phi_t^m_t)``

        1 - q^e equals -(q^e - 1) for e > 0 and q^e (q^-e - 1) for e < 0.
        """
        sign, shift = 1, 0
        multiplicities: Counter = Counter()
        for exponent, count in self.den_exponents.items():
            if exponent > 0 and count % 2:
                sign = -sign
            if exponent < 0:
                shift += exponent * count
            for t in cyclotomic_factorization(exponent):
                multiplicities[t] += count
        return sign, shift, multiplicities

    def cancel_cyclotomic(
        self, indices: Optional[Iterable[int]] = None
    ) -> Tuple[LaurentPoly, Counter]:
        """
        Cancel cyclotomic factors shared by numerator and denominator

        Args:
            indices: Restrict the cancellation to these Phi_t; all when None

        Returns:
            Tuple[LaurentPoly, Counter]: the numerator times ``sign * q^-shift``
            after cancellation, and the Phi_t multiplicities left in the
            denominator
        """
        sign, shift, multiplicities = self.cyclotomic_content()
        numerator = self.numerator.scale(sign).shift(-shift)
        wanted = set(multiplicities) if indices is None else set(indices)
        for t in sorted(wanted & set(multiplicities), reverse=True):
            numerator, removed = _strip_cyclotomic(numerator, t, multiplicities[t])
            multiplicities[t] -= removed
        return numerator, +multiplicities

    def to_ratfun(self) -> RatFun:
        """The canonical rational function of the sum"""
        if self.is_zero():
            return RatFun.zero()
        numerator, remaining = self.cancel_cyclotomic()
        den = LaurentPoly.one()
        for t, count in sorted(remaining.items()):
            den = den * cyclotomic(t) ** count
        return RatFun.from_canonical(numerator, den)


def _binomials(factors: Iterable[PochFactor], j: int) -> List[int]:
    exponents: List[int] = []
    for factor in factors:
        exponents.extend([factor.exponent_at(j)] * factor.multiplicity)
    return exponents


def accumulate(spec: SeriesSpec, n: int, a_power: Optional[int] = None) -> PartialSum:
    """
    Sum a spec with a running common denominator

    Args:
        spec: The family member
        n: The parameter n, fixing the truncation T(n)
        a_power: s for the substitution a = q^s, required for parametric specs

    Returns:
        PartialSum: numerator and denominator binomials at k = T; summation
        stops early once a numerator binomial 1 - q^0 makes every later term zero

    Raises:
        SpecError: If a denominator binomial vanishes or a is unresolved
    """
    spec = _resolve(spec, a_power)
    last = spec.last_index(n)
    running = LaurentPoly.one()
    total = LaurentPoly.one()
    den_exponents: Counter = Counter()
    terms = 1
    for j in range(last):
        # Ratio of term j+1 to term j
        top = _binomials(spec.numerator, j)
        if 0 in top:
            logger.debug(f"{spec.family}: numerator vanishes from k={j + 1}, n={n}")
            break
        bottom = _binomials(spec.denominator, j)
        if 0 in bottom:
            raise SpecError(f"{spec.family}: denominator vanishes at k={j + 1} for n={n}")
        for e in top:
            running = running.times_binomial(e)
        running = running.shift(spec.term_q_power)
        # Bring the total over the new common denominator
        for e in bottom:
            total = total.times_binomial(e)
            den_exponents[e] += 1
        total = total + running
        terms += 1
    return PartialSum(total, dict(den_exponents), terms, last)


def term_value(spec: SeriesSpec, k: int, a_power: Optional[int] = None) -> RatFun:
    """The k-th summand on its own, from the expanded q-shifted factorials"""
    if spec.is_parametric() and a_power is None:
        raise SpecError(f"family {spec.family} depends on a; supply a = q^s to evaluate it")
    s = a_power or 0
    top = pochhammer_product(spec.numerator, k).specialize(s)
    bottom = pochhammer_product(spec.denominator, k).specialize(s)
    if bottom.is_zero():
        raise SpecError(f"{spec.family}: denominator vanishes at k={k}")
    return top / bottom * LaurentPoly.monomial(spec.term_q_power * k)


def sum_exact(spec: SeriesSpec, n: int, a_power: Optional[int] = None) -> RatFun:
    """
    The exact value of a truncated sum as a canonical rational function

    >>> from qfactors.series.catalog import family_main
    >>> str(sum_exact(family_main(3, 1), 1))
    '1'
    """
    return accumulate(spec, n, a_power).to_ratfun()


def sum_quotient(
    spec: SeriesSpec, n: int, modulus: Modulus, a_power: Optional[int] = None
) -> QuotientElem:
    """
    The truncated sum projected into Q[q]/(modulus), term by term

    Raises:
        NotAUnitError: If the common denominator is not a unit modulo the modulus
        SpecError: If a denominator binomial vanishes or a is unresolved
    """
    spec = _resolve(spec, a_power)
    last = spec.last_index(n)
    one = modulus.element(LaurentPoly.one())
    weight = modulus.element(LaurentPoly.monomial(spec.term_q_power))
    num_powers = [modulus.element(LaurentPoly.monomial(f.q_exp)) for f in spec.numerator]
    den_powers = [modulus.element(LaurentPoly.monomial(f.q_exp)) for f in spec.denominator]
    num_steps = [modulus.element(LaurentPoly.monomial(f.step)) for f in spec.numerator]
    den_steps = [modulus.element(LaurentPoly.monomial(f.step)) for f in spec.denominator]
    running, total, den = one, one, one
    for j in range(last):
        if 0 in _binomials(spec.numerator, j):
            break
        if 0 in _binomials(spec.denominator, j):
            raise SpecError(f"{spec.family}: denominator vanishes at k={j + 1} for n={n}")
        for i, factor in enumerate(spec.numerator):
            for _ in range(factor.multiplicity):
                running = running.times_binomial(num_powers[i])
            num_powers[i] = num_powers[i] * num_steps[i]
        running = running * weight
        for i, factor in enumerate(spec.denominator):
            for _ in range(factor.multiplicity):
                total = total.times_binomial(den_powers[i])
                den = den.times_binomial(den_powers[i])
            den_powers[i] = den_powers[i] * den_steps[i]
        total = total + running
    logger.debug(f"{spec.family}: quotient sum for n={n} modulo {modulus.label}")
    return total / den
