"""
Laurent Polynomials in q

Dense Laurent polynomials over the rationals. A polynomial is stored as the
lowest exponent present (``offset``) followed by the coefficients from that
exponent upward. Ordinary polynomials are exactly those with ``offset >= 0``.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Dict, Iterator, List, Sequence, Tuple, Union

from sympy.polys.domains import ZZ
from sympy.polys.euclidtools import dup_rr_prs_gcd

from qfactors.exact.rational import Rational, integer_content, inverse, normalize

logger = logging.getLogger(__name__)

Scalar = Union[int, Fraction]


class NotDivisibleError(ArithmeticError):
    """Raised by exact division when the divisor leaves a nonzero remainder"""

    def __init__(self, dividend: "LaurentPoly", divisor: "LaurentPoly", remainder: "LaurentPoly"):
        self.dividend = dividend
        self.divisor = divisor
        self.remainder = remainder
        super().__init__(
            f"not divisible: remainder of degree {remainder.degree()} modulo {divisor}"
        )


def _fold(coeffs: Sequence[Rational]) -> List[Rational]:
    return [
        c.numerator if type(c) is Fraction and c.denominator == 1 else c for c in coeffs
    ]


@dataclass(frozen=True, init=False)
class LaurentPoly:
    """
    A Laurent polynomial in q with rational coefficients.

    The zero polynomial has offset 0 and no coefficients; otherwise the first
    and last stored coefficients are nonzero.

    >>> LaurentPoly(-1, (1, 0, 1))
    LaurentPoly('q + q^-1')
    """

    offset: int
    coeffs: Tuple[Rational, ...]

    def __init__(self, offset: int = 0, coeffs: Sequence[Rational] = ()):
        lo, hi = 0, len(coeffs)
        while lo < hi and coeffs[lo] == 0:
            lo += 1
        while lo < hi and coeffs[hi - 1] == 0:
            hi -= 1
        if lo == hi:
            object.__setattr__(self, "offset", 0)
            object.__setattr__(self, "coeffs", ())
        else:
            object.__setattr__(self, "offset", offset + lo)
            object.__setattr__(self, "coeffs", tuple(_fold(coeffs[lo:hi])))

    # Constructors

    @classmethod
    def zero(cls) -> "LaurentPoly":
        return cls(0, ())

    @classmethod
    def one(cls) -> "LaurentPoly":
        return cls(0, (1,))

    @classmethod
    def constant(cls, value: Scalar) -> "LaurentPoly":
        return cls(0, (normalize(value),))

    @classmethod
    def monomial(cls, exponent: int, coeff: Scalar = 1) -> "LaurentPoly":
        """Return ``coeff * q^exponent``"""
        return cls(exponent, (normalize(coeff),))

    @classmethod
    def binomial(cls, exponent: int, coeff: Scalar = 1) -> "LaurentPoly":
        """Return ``1 - coeff * q^exponent``"""
        return cls.one().times_binomial(exponent, coeff)

    @classmethod
    def from_terms(cls, terms: Dict[int, Scalar]) -> "LaurentPoly":
        """Build a polynomial from an exponent -> coefficient mapping"""
        terms = {e: c for e, c in terms.items() if c != 0}
        if not terms:
            return cls.zero()
        low, high = min(terms), max(terms)
        dense = [0] * (high - low + 1)
        for exponent, coeff in terms.items():
            dense[exponent - low] = normalize(coeff)
        return cls(low, dense)

    # Inspection

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_one(self) -> bool:
        return self.offset == 0 and self.coeffs == (1,)

    def is_ordinary(self) -> bool:
        """True when no negative power of q occurs"""
        return self.offset >= 0

    def valuation(self) -> int:
        return self.offset

    def degree(self) -> int:
        """Highest exponent present, or -1 for the zero polynomial"""
        if not self.coeffs:
            return -1
        return self.offset + len(self.coeffs) - 1

    def leading_coefficient(self) -> Rational:
        return self.coeffs[-1] if self.coeffs else 0

    def coefficient(self, exponent: int) -> Rational:
        index = exponent - self.offset
        if 0 <= index < len(self.coeffs):
            return self.coeffs[index]
        return 0

    def terms(self) -> Iterator[Tuple[int, Rational]]:
        """Iterate over ``(exponent, coefficient)`` pairs with nonzero coefficient"""
        for i, c in enumerate(self.coeffs):
            if c:
                yield self.offset + i, c

    # Ring operations

    def _coerce(self, other: Any) -> "LaurentPoly":
        if isinstance(other, LaurentPoly):
            return other
        if isinstance(other, (int, Fraction)):
            return LaurentPoly.constant(other)
        return NotImplemented

    def __add__(self, other: Any) -> "LaurentPoly":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if not other.coeffs:
            return self
        if not self.coeffs:
            return other
        low = min(self.offset, other.offset)
        high = max(self.degree(), other.degree())
        dense = [0] * (high - low + 1)
        for i, c in enumerate(self.coeffs, self.offset - low):
            dense[i] = c
        for i, c in enumerate(other.coeffs, other.offset - low):
            dense[i] += c
        return LaurentPoly(low, dense)

    __radd__ = __add__

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly(self.offset, [-c for c in self.coeffs])

    def __sub__(self, other: Any) -> "LaurentPoly":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other: Any) -> "LaurentPoly":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other: Any) -> "LaurentPoly":
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        if not self.coeffs or not other.coeffs:
            return LaurentPoly.zero()
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        dense = [0] * (len(a) + len(b) - 1)
        for j, bj in enumerate(b):
            if not bj:
                continue
            for i, ai in enumerate(a):
                if ai:
                    dense[i + j] += ai * bj
        return LaurentPoly(self.offset + other.offset, dense)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "LaurentPoly":
        if exponent < 0:
            if len(self.coeffs) != 1:
                raise ValueError("only monomials have negative powers")
            return LaurentPoly.monomial(self.offset * exponent, inverse(self.coeffs[0]) ** -exponent)
        result, base = LaurentPoly.one(), self
        while exponent:
            if exponent & 1:
                result = result * base
            exponent >>= 1
            if exponent:
                base = base * base
        return result

    def scale(self, factor: Scalar) -> "LaurentPoly":
        if factor == 0:
            return LaurentPoly.zero()
        if factor == 1:
            return self
        return LaurentPoly(self.offset, [c * factor for c in self.coeffs])

    def shift(self, exponent: int) -> "LaurentPoly":
        """Multiply by ``q^exponent``"""
        if not self.coeffs or exponent == 0:
            return self
        return LaurentPoly(self.offset + exponent, self.coeffs)

    def times_binomial(self, exponent: int, coeff: Scalar = 1) -> "LaurentPoly":
        """
        Multiply by ``1 - coeff * q^exponent`` in linear time

        Args:
            exponent: Exponent of q in the binomial, any sign
            coeff: Coefficient of the q-power

        Returns:
            LaurentPoly: The product
        """
        if not self.coeffs or coeff == 0:
            return self
        if exponent == 0:
            return self.scale(1 - coeff)
        size = len(self.coeffs)
        step = abs(exponent)
        dense = [0] * (size + step)
        if exponent > 0:
            dense[:size] = self.coeffs
            for i, c in enumerate(self.coeffs, step):
                if c:
                    dense[i] -= coeff * c
            return LaurentPoly(self.offset, dense)
        dense[step:] = self.coeffs
        for i, c in enumerate(self.coeffs):
            if c:
                dense[i] -= coeff * c
        return LaurentPoly(self.offset - step, dense)

    def unshifted(self) -> "LaurentPoly":
        """Return ``q^(-offset) * self``, which has a nonzero constant term"""
        return self.shift(-self.offset)

    def monic(self) -> "LaurentPoly":
        if not self.coeffs:
            return self
        return self.scale(inverse(self.coeffs[-1]))

    # Division

    def _dense(self) -> List[Rational]:
        if self.offset < 0:
            raise ValueError(f"expected an ordinary polynomial, got {self}")
        return [0] * self.offset + list(self.coeffs)

    def divmod(self, divisor: "LaurentPoly") -> Tuple["LaurentPoly", "LaurentPoly"]:
        """
        Euclidean division of ordinary polynomials

        Args:
            divisor: A nonzero ordinary polynomial

        Returns:
            Tuple[LaurentPoly, LaurentPoly]: quotient and remainder, with
            ``deg(remainder) < deg(divisor)``

        Raises:
            ZeroDivisionError: If the divisor is zero
            ValueError: If either operand has negative powers of q
        """
        if divisor.is_zero():
            raise ZeroDivisionError("division by zero")
        a, b = self._dense(), divisor._dense()
        db = len(b) - 1
        if len(a) <= db:
            return LaurentPoly.zero(), self
        lc_inv = inverse(b[-1])
        quotient = [0] * (len(a) - db)
        lower = [(j, bj) for j, bj in enumerate(b[:-1]) if bj]
        for i in range(len(a) - 1, db - 1, -1):
            c = a[i]
            if not c:
                continue
            if lc_inv != 1:
                c = c * lc_inv
            base = i - db
            quotient[base] = c
            for j, bj in lower:
                a[base + j] -= c * bj
            a[i] = 0
        return LaurentPoly(0, quotient), LaurentPoly(0, a[:db])

    def rem(self, divisor: "LaurentPoly") -> "LaurentPoly":
        return self.divmod(divisor)[1]

    def exact_divide(self, divisor: "LaurentPoly") -> "LaurentPoly":
        """
        Divide exactly in the Laurent polynomial ring

        Raises:
            NotDivisibleError: If ``divisor`` does not divide ``self``; the
                error carries the remainder of the q-free parts
        """
        if divisor.is_zero():
            raise ZeroDivisionError("division by zero")
        if self.is_zero():
            return self
        quotient, remainder = self.unshifted().divmod(divisor.unshifted())
        if not remainder.is_zero():
            raise NotDivisibleError(self, divisor, remainder)
        return quotient.shift(self.offset - divisor.offset)

    def is_divisible_by(self, divisor: "LaurentPoly") -> bool:
        if self.is_zero():
            return True
        return self.unshifted().rem(divisor.unshifted()).is_zero()

    def gcd(self, other: "LaurentPoly") -> "LaurentPoly":
        """
        Greatest common divisor, monic with nonzero constant term

        Powers of q are units here, so they are stripped before the
        subresultant computation over the integers.
        """
        a, b = self.unshifted(), other.unshifted()
        if a.is_zero():
            return b.monic()
        if b.is_zero():
            return a.monic()
        if len(a.coeffs) == 1 or len(b.coeffs) == 1:
            return LaurentPoly.one()
        _, ints_a = integer_content(a.coeffs)
        _, ints_b = integer_content(b.coeffs)
        h, _, _ = dup_rr_prs_gcd(
            [ZZ(c) for c in reversed(ints_a)], [ZZ(c) for c in reversed(ints_b)], ZZ
        )
        return LaurentPoly(0, [int(c) for c in reversed(h)]).unshifted().monic()

    # Evaluation and substitution

    def evaluate(self, point: Scalar) -> Rational:
        """Evaluate at a rational point (nonzero when negative powers occur)"""
        if not self.coeffs:
            return 0
        point = normalize(point)
        value: Rational = 0
        for c in reversed(self.coeffs):
            value = value * point + c
        if self.offset:
            if point == 0:
                if self.offset < 0:
                    raise ZeroDivisionError("division by zero")
                return 0
            value = value * Fraction(point) ** self.offset
        return normalize(value)

    def substitute(self, power: int) -> "LaurentPoly":
        """
        Substitute ``q -> q^power``

        Args:
            power: Nonzero integer; negative powers reverse the coefficient order
        """
        if power == 0:
            raise ValueError("substitution q -> q^0 is not allowed")
        if not self.coeffs:
            return self
        size = (len(self.coeffs) - 1) * abs(power) + 1
        dense: List[Rational] = [0] * size
        if power > 0:
            for i, c in enumerate(self.coeffs):
                dense[i * power] = c
            return LaurentPoly(self.offset * power, dense)
        top = len(self.coeffs) - 1
        for i, c in enumerate(self.coeffs):
            dense[(top - i) * -power] = c
        return LaurentPoly(self.degree() * power, dense)

    # Presentation

    def to_dict(self) -> Dict[str, Any]:
        return {"offset": self.offset, "coeffs": [str(c) for c in self.coeffs]}

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts: List[str] = []
        for exponent, c in reversed(list(self.terms())):
            sign = "-" if c < 0 else "+"
            magnitude = abs(c)
            if exponent == 0:
                body = str(magnitude)
            else:
                power = "q" if exponent == 1 else f"q^{exponent}"
                if magnitude == 1:
                    body = power
                elif isinstance(magnitude, Fraction):
                    body = f"({magnitude})*{power}"
                else:
                    body = f"{magnitude}*{power}"
            if not parts:
                parts.append(body if sign == "+" else f"-{body}")
            else:
                parts.append(f" {sign} {body}")
        return "".join(parts)

    def __repr__(self) -> str:
        return f"LaurentPoly('{self}')"
