"""
q-Shifted Factorials

Factors of the form (a^e q^r; q^d)_k, optionally raised to a multiplicity,
and the Laurent-polynomial-in-a values they produce.
"""

import logging
from dataclasses import dataclass
from typing import Any, List, Sequence, Tuple

from pydantic import BaseModel, ConfigDict, Field

from qfactors.exact.laurent import LaurentPoly
from qfactors.exact.ratfun import RatFun

logger = logging.getLogger(__name__)


class PochFactor(BaseModel):
    """
    One q-shifted factorial (a^a_exp q^q_exp; q^step)_k raised to ``multiplicity``
    """

    model_config = ConfigDict(frozen=True)

    a_exp: int = 0
    q_exp: int
    step: int = Field(ge=1)
    multiplicity: int = Field(default=1, ge=1)

    def exponent_at(self, j: int, a_power: int = 0) -> int:
        """Exponent of q in the j-th binomial once a is replaced by q^a_power"""
        return self.q_exp + j * self.step + self.a_exp * a_power

    def specialize(self, a_power: int) -> "PochFactor":
        """Replace the parameter a by q^a_power"""
        return PochFactor(
            q_exp=self.q_exp + self.a_exp * a_power,
            step=self.step,
            multiplicity=self.multiplicity,
        )

    def is_parametric(self) -> bool:
        return self.a_exp != 0

    def __str__(self) -> str:
        base = f"q^{self.q_exp}"
        if self.a_exp:
            base = f"a^{self.a_exp}*{base}"
        power = f"^{self.multiplicity}" if self.multiplicity > 1 else ""
        return f"({base};q^{self.step})_k{power}"


@dataclass(frozen=True)
class AParamPoly:
    """
    A Laurent polynomial in the parameter a whose coefficients are rational
    functions of q: ``sum(coeffs[i] * a^(a_offset + i))``.
    """

    a_offset: int
    coeffs: Tuple[RatFun, ...]

    def __post_init__(self):
        coeffs = list(self.coeffs)
        offset = self.a_offset
        while coeffs and coeffs[0].is_zero():
            coeffs.pop(0)
            offset += 1
        while coeffs and coeffs[-1].is_zero():
            coeffs.pop()
        object.__setattr__(self, "coeffs", tuple(coeffs))
        object.__setattr__(self, "a_offset", offset if coeffs else 0)

    @classmethod
    def constant(cls, value: RatFun) -> "AParamPoly":
        return cls(0, (value,))

    @classmethod
    def from_poly(cls, poly: LaurentPoly) -> "AParamPoly":
        return cls.constant(RatFun.from_poly(poly))

    @classmethod
    def one(cls) -> "AParamPoly":
        return cls.constant(RatFun.one())

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_q_only(self) -> bool:
        """True when the value does not depend on a"""
        return self.is_zero() or (self.a_offset == 0 and len(self.coeffs) == 1)

    def coefficient(self, a_power: int) -> RatFun:
        index = a_power - self.a_offset
        if 0 <= index < len(self.coeffs):
            return self.coeffs[index]
        return RatFun.zero()

    def __add__(self, other: Any) -> "AParamPoly":
        if not isinstance(other, AParamPoly):
            return NotImplemented
        if other.is_zero():
            return self
        if self.is_zero():
            return other
        low = min(self.a_offset, other.a_offset)
        high = max(self.a_offset + len(self.coeffs), other.a_offset + len(other.coeffs))
        return AParamPoly(
            low, tuple(self.coefficient(i) + other.coefficient(i) for i in range(low, high))
        )

    def __neg__(self) -> "AParamPoly":
        return AParamPoly(self.a_offset, tuple(-c for c in self.coeffs))

    def __sub__(self, other: Any) -> "AParamPoly":
        if not isinstance(other, AParamPoly):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other: Any) -> "AParamPoly":
        if isinstance(other, RatFun):
            other = AParamPoly.constant(other)
        if not isinstance(other, AParamPoly):
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return AParamPoly(0, ())
        product: List[RatFun] = [RatFun.zero()] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, left in enumerate(self.coeffs):
            for j, right in enumerate(other.coeffs):
                product[i + j] = product[i + j] + left * right
        return AParamPoly(self.a_offset + other.a_offset, tuple(product))

    def __pow__(self, exponent: int) -> "AParamPoly":
        if exponent < 0:
            raise ValueError("negative powers are not supported")
        result = AParamPoly.one()
        for _ in range(exponent):
            result = result * self
        return result

    def times_binomial(self, a_exp: int, q_exp: int) -> "AParamPoly":
        """Multiply by ``1 - a^a_exp * q^q_exp``"""
        shifted = AParamPoly(
            self.a_offset + a_exp,
            tuple(RatFun.from_canonical(c.num.shift(q_exp), c.den) for c in self.coeffs),
        )
        return self - shifted

    def specialize(self, a_power: int) -> RatFun:
        """Evaluate at a = q^a_power"""
        total = RatFun.zero()
        for i, c in enumerate(self.coeffs):
            exponent = (self.a_offset + i) * a_power
            total = total + RatFun.from_canonical(c.num.shift(exponent), c.den)
        return total

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        return " + ".join(
            f"({c})*a^{self.a_offset + i}" for i, c in enumerate(self.coeffs) if not c.is_zero()
        )


def q_pochhammer(factor: PochFactor, k: int) -> AParamPoly:
    """
    Expand a q-shifted factorial

    Args:
        factor: The factor (a^a_exp q^q_exp; q^step)_k and its multiplicity
        k: Number of binomials, k >= 0

    Returns:
        AParamPoly: prod_{j<k} (1 - a^a_exp q^(q_exp + j*step)), raised to the
        factor's multiplicity; a single a^0 coefficient when a_exp is 0
    """
    if k < 0:
        raise ValueError(f"q-shifted factorial needs k >= 0, got {k}")
    if factor.a_exp == 0:
        poly = LaurentPoly.one()
        for j in range(k):
            poly = poly.times_binomial(factor.exponent_at(j))
        return AParamPoly.from_poly(poly**factor.multiplicity)
    value = AParamPoly.one()
    for j in range(k):
        value = value.times_binomial(factor.a_exp, factor.exponent_at(j))
    return value**factor.multiplicity


def pochhammer_product(factors: Sequence[PochFactor], k: int) -> AParamPoly:
    """Product of several q-shifted factorials at the same k"""
    value = AParamPoly.one()
    for factor in factors:
        value = value * q_pochhammer(factor, k)
    return value
