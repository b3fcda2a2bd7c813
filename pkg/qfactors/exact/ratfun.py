"""
Rational Functions in q

Quotients of Laurent polynomials kept in a canonical form, so that equality of
rational functions is equality of their stored fields.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Union

from qfactors.exact.laurent import LaurentPoly
from qfactors.exact.rational import Rational, inverse, normalize

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class RatFun:
    """
    A rational function ``num / den``.

    Canonical form: ``den`` is an ordinary polynomial with nonzero constant
    term and leading coefficient 1 (every power of q lives in ``num``), and
    the q-free part of ``num`` is coprime to ``den``. Use :meth:`make` to build
    instances from arbitrary numerator/denominator pairs.
    """

    num: LaurentPoly
    den: LaurentPoly

    @classmethod
    def make(cls, num: LaurentPoly, den: LaurentPoly) -> "RatFun":
        """
        Build the canonical form of ``num / den``

        Raises:
            ZeroDivisionError: If ``den`` is zero
        """
        if den.is_zero():
            raise ZeroDivisionError("division by zero")
        if num.is_zero():
            return cls.zero()
        num = num.shift(-den.offset)
        den = den.unshifted()
        if len(den.coeffs) > 1:
            common = num.gcd(den)
            if not common.is_one():
                num = num.exact_divide(common)
                den = den.exact_divide(common)
        lc = den.leading_coefficient()
        if lc != 1:
            factor = inverse(lc)
            num, den = num.scale(factor), den.scale(factor)
        return cls(num, den)

    @classmethod
    def from_canonical(cls, num: LaurentPoly, den: LaurentPoly) -> "RatFun":
        """Wrap a pair already known to be canonical, skipping the gcd"""
        return cls(num, den)

    @classmethod
    def from_poly(cls, poly: LaurentPoly) -> "RatFun":
        return cls(poly, LaurentPoly.one())

    @classmethod
    def zero(cls) -> "RatFun":
        return cls(LaurentPoly.zero(), LaurentPoly.one())

    @classmethod
    def one(cls) -> "RatFun":
        return cls(LaurentPoly.one(), LaurentPoly.one())

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_polynomial(self) -> bool:
        return self.den.is_one()

    def _coerce(self, other: Any) -> Union["RatFun", Any]:
        if isinstance(other, RatFun):
            return other
        if isinstance(other, LaurentPoly):
            return RatFun.from_poly(other)
        if isinstance(other, (int, Fraction)):
            return RatFun.from_poly(LaurentPoly.constant(other))
        return NotImplemented

    def __add__(self, other: Any) -> "RatFun":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if self.den == other.den:
            if self.den.is_one():
                return RatFun.from_poly(self.num + other.num)
            return RatFun.make(self.num + other.num, self.den)
        return RatFun.make(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self) -> "RatFun":
        return RatFun(-self.num, self.den)

    def __sub__(self, other: Any) -> "RatFun":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other: Any) -> "RatFun":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other: Any) -> "RatFun":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if self.den.is_one() and other.den.is_one():
            return RatFun.from_poly(self.num * other.num)
        return RatFun.make(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def invert(self) -> "RatFun":
        if self.is_zero():
            raise ZeroDivisionError("division by zero")
        return RatFun.make(self.den, self.num)

    def __truediv__(self, other: Any) -> "RatFun":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.invert()

    def __pow__(self, exponent: int) -> "RatFun":
        if exponent < 0:
            return self.invert() ** -exponent
        return RatFun(self.num**exponent, self.den**exponent)

    def evaluate(self, point: Rational) -> Rational:
        denominator = self.den.evaluate(point)
        if denominator == 0:
            raise ZeroDivisionError("division by zero")
        return normalize(self.num.evaluate(point) / Fraction(denominator))

    def substitute(self, power: int) -> "RatFun":
        """Substitute ``q -> q^power`` and renormalize"""
        return RatFun.make(self.num.substitute(power), self.den.substitute(power))

    def __str__(self) -> str:
        if self.den.is_one():
            return str(self.num)
        return f"({self.num}) / ({self.den})"
