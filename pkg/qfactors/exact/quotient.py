"""
Quotient Ring Residues

Arithmetic in Q[q]/(M(q)) for the moduli of interest (powers of cyclotomic
polynomials, q-integers and their products). Every modulus here has a nonzero
constant term, so q is a unit and Laurent polynomials reduce as well.
"""

import logging
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import cached_property
from typing import Any, Tuple

from sympy.polys.domains import QQ
from sympy.polys.euclidtools import dup_invert
from sympy.polys.polyerrors import NotInvertible

from qfactors.exact.laurent import LaurentPoly
from qfactors.exact.ratfun import RatFun
from qfactors.exact.rational import Rational, inverse

logger = logging.getLogger(__name__)


class NotAUnitError(ArithmeticError):
    """Raised when a residue that must be inverted shares a factor with the modulus"""

    def __init__(self, value: LaurentPoly, modulus: "Modulus", common: LaurentPoly):
        self.value = value
        self.modulus = modulus
        self.gcd = common
        super().__init__(f"denominator not a unit modulo {modulus.label}: gcd is {common}")


class ModulusKind(str, Enum):
    PHI_POW = "phi_pow"
    QINT = "qint"
    QINT_PHI = "qint_phi"
    QINT_SQ = "qint_sq"
    CUSTOM = "custom"


@dataclass(frozen=True)
class Modulus:
    """
    A modulus polynomial together with its provenance.

    ``factors`` lists ``(t, multiplicity)`` pairs such that ``poly`` is the
    product of the cyclotomic polynomials Phi_t to those multiplicities; it
    is empty for a custom modulus.
    """

    poly: LaurentPoly
    kind: ModulusKind = ModulusKind.CUSTOM
    n: int = 0
    exponent: int = 1
    factors: Tuple[Tuple[int, int], ...] = ()

    def __post_init__(self):
        if not self.poly.is_ordinary() or self.poly.degree() < 1:
            raise ValueError(f"modulus must be an ordinary polynomial of degree >= 1, got {self.poly}")

    @classmethod
    def custom(cls, poly: LaurentPoly) -> "Modulus":
        return cls(poly=poly)

    @property
    def label(self) -> str:
        if self.kind is ModulusKind.PHI_POW:
            return f"phi_pow({self.n},{self.exponent})"
        if self.kind is ModulusKind.CUSTOM:
            return f"custom({self.poly})"
        return f"{self.kind.value}({self.n})"

    @property
    def degree(self) -> int:
        return self.poly.degree()

    @cached_property
    def q_inverse(self) -> LaurentPoly:
        """Residue of q^-1, read off from M(q) = m0 + q*P(q)"""
        m0 = self.poly.coefficient(0)
        if m0 == 0:
            raise NotAUnitError(LaurentPoly.monomial(1), self, LaurentPoly.monomial(1))
        rest = (self.poly - LaurentPoly.constant(m0)).shift(-1)
        return rest.scale(-inverse(m0))

    def reduce(self, poly: LaurentPoly) -> LaurentPoly:
        """Reduce a Laurent polynomial to its residue of degree < deg(M)"""
        if poly.is_zero():
            return poly
        if poly.offset >= 0:
            return poly.rem(self.poly)
        head = poly.unshifted().rem(self.poly)
        return (head * self.power_of_q(poly.offset)).rem(self.poly)

    def power_of_q(self, exponent: int) -> LaurentPoly:
        """Residue of q^exponent, by binary powering in the quotient ring"""
        if 0 <= exponent < self.degree:
            return LaurentPoly.monomial(exponent)
        base = LaurentPoly.monomial(1) if exponent > 0 else self.q_inverse
        count = abs(exponent)
        result = LaurentPoly.one()
        while count:
            if count & 1:
                result = (result * base).rem(self.poly)
            count >>= 1
            if count:
                base = (base * base).rem(self.poly)
        return result

    def element(self, poly: LaurentPoly) -> "QuotientElem":
        return QuotientElem(self.reduce(poly), self)

    def invert_residue(self, residue: LaurentPoly) -> LaurentPoly:
        """
        Invert a reduced residue with the extended Euclidean algorithm over Q

        Raises:
            NotAUnitError: If the residue is not coprime to the modulus
        """
        if residue.is_zero():
            raise NotAUnitError(residue, self, self.poly)
        if residue.degree() == 0:
            return LaurentPoly.constant(inverse(residue.coeffs[0]))
        try:
            inv = dup_invert(_to_qq(residue), _to_qq(self.poly), QQ)
        except NotInvertible:
            raise NotAUnitError(residue, self, residue.gcd(self.poly))
        return LaurentPoly(
            0, [Fraction(int(c.numerator), int(c.denominator)) for c in reversed(inv)]
        )


def _to_qq(poly: LaurentPoly) -> list:
    dense = [0] * poly.offset + list(poly.coeffs)
    return [
        QQ(c.numerator, c.denominator) if isinstance(c, Fraction) else QQ(c)
        for c in reversed(dense)
    ]


@dataclass(frozen=True)
class QuotientElem:
    """A reduced residue in Q[q]/(modulus)"""

    residue: LaurentPoly
    modulus: Modulus

    def _check(self, other: "QuotientElem") -> None:
        if other.modulus != self.modulus:
            raise ValueError(f"modulus mismatch: {self.modulus.label} vs {other.modulus.label}")

    def _coerce(self, other: Any) -> Any:
        if isinstance(other, QuotientElem):
            self._check(other)
            return other
        if isinstance(other, LaurentPoly):
            return self.modulus.element(other)
        if isinstance(other, (int, Fraction)):
            return self.modulus.element(LaurentPoly.constant(other))
        return NotImplemented

    def is_zero(self) -> bool:
        return self.residue.is_zero()

    def is_one(self) -> bool:
        return self.residue.is_one()

    def __add__(self, other: Any) -> "QuotientElem":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return QuotientElem(self.residue + other.residue, self.modulus)

    __radd__ = __add__

    def __neg__(self) -> "QuotientElem":
        return QuotientElem(-self.residue, self.modulus)

    def __sub__(self, other: Any) -> "QuotientElem":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return QuotientElem(self.residue - other.residue, self.modulus)

    def __mul__(self, other: Any) -> "QuotientElem":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return QuotientElem((self.residue * other.residue).rem(self.modulus.poly), self.modulus)

    __rmul__ = __mul__

    def times_binomial(self, power: "QuotientElem", coeff: Rational = 1) -> "QuotientElem":
        """Multiply by ``1 - coeff * power`` where ``power`` is a residue of a q-power"""
        return self - self * power.residue.scale(coeff)

    def inverse(self) -> "QuotientElem":
        return QuotientElem(self.modulus.invert_residue(self.residue), self.modulus)

    def __truediv__(self, other: Any) -> "QuotientElem":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __str__(self) -> str:
        return f"{self.residue} mod {self.modulus.label}"


def quotient_project(value: RatFun, modulus: Modulus) -> QuotientElem:
    """
    Project a rational function into Q[q]/(modulus)

    Args:
        value: The rational function in canonical form
        modulus: Target modulus (nonzero constant term)

    Returns:
        QuotientElem: ``num * den^-1`` reduced modulo the modulus

    Raises:
        NotAUnitError: If the denominator is not coprime to the modulus
    """
    if value.is_zero():
        return QuotientElem(LaurentPoly.zero(), modulus)
    numerator = modulus.reduce(value.num)
    if value.den.is_one():
        return QuotientElem(numerator, modulus)
    den = modulus.reduce(value.den)
    return QuotientElem(numerator, modulus) * QuotientElem(modulus.invert_residue(den), modulus)
