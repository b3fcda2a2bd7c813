"""
Series Specifications

Symbolic descriptions of truncated sums

    sum_{k=0}^{T(n)} prod(numerator factors) q^(c*k) / prod(denominator factors)

where every factor is a q-shifted factorial (a^e q^r; q^d)_k.
"""

import logging
from enum import Enum
from typing import Dict, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field, model_validator

from qfactors.qfun.pochhammer import PochFactor

logger = logging.getLogger(__name__)


class SpecError(ValueError):
    """Raised when family parameters or a truncation are inadmissible"""

    pass


class TruncationKind(str, Enum):
    FULL = "upto_n_minus_1"
    HALF = "upto_half"
    EXPR = "upto_expr"


def truncation_bound(d: int, r: int, n: int) -> int:
    """
    The bound (d*n - n - r)/d beyond which q^(r-(d-1)n) kills every term

    Raises:
        SpecError: If the bound is not an integer in (0, n-1]
    """
    top = (d - 1) * n - r
    if top % d:
        raise SpecError(f"(d*n - n - r)/d is not an integer for d={d}, r={r}, n={n}")
    bound = top // d
    if not 0 < bound <= n - 1:
        raise SpecError(f"(d*n - n - r)/d = {bound} lies outside (0, {n - 1}] for d={d}, r={r}, n={n}")
    return bound


class TruncationRule(BaseModel):
    """Where a sum stops, as a function of n"""

    model_config = ConfigDict(frozen=True)

    kind: TruncationKind = TruncationKind.FULL
    d: Optional[int] = None
    r: Optional[int] = None

    @model_validator(mode="after")
    def _check_expr(self) -> "TruncationRule":
        if self.kind is TruncationKind.EXPR and (self.d is None or self.r is None):
            raise ValueError("upto_expr truncation needs d and r")
        return self

    def evaluate(self, n: int) -> int:
        """Last summation index T(n)"""
        if n < 1:
            raise SpecError(f"n must be positive, got {n}")
        if self.kind is TruncationKind.FULL:
            return n - 1
        if self.kind is TruncationKind.HALF:
            if n % 2 == 0:
                raise SpecError(f"half truncation (n+1)/2 needs odd n, got {n}")
            return (n + 1) // 2
        return truncation_bound(self.d, self.r, n)

    def __str__(self) -> str:
        if self.kind is TruncationKind.EXPR:
            return f"upto_expr(({self.d}n-n-({self.r}))/{self.d})"
        return self.kind.value


FULL = TruncationRule()
HALF = TruncationRule(kind=TruncationKind.HALF)


class SeriesSpec(BaseModel):
    """
    A family member: numerator and denominator factors, the q^(c*k) weight
    and the truncation rule.
    """

    model_config = ConfigDict(frozen=True)

    family: str
    params: Dict[str, int] = Field(default_factory=dict)
    step: int = Field(ge=1)
    numerator: Tuple[PochFactor, ...]
    denominator: Tuple[PochFactor, ...]
    term_q_power: int = 0
    truncation: TruncationRule = FULL

    @model_validator(mode="after")
    def _check_denominator(self) -> "SeriesSpec":
        base = sum(
            f.multiplicity
            for f in self.denominator
            if f.a_exp == 0 and f.q_exp == self.step and f.step == self.step
        )
        if base < 1:
            raise ValueError(
                f"denominator of {self.family} must contain (q^{self.step};q^{self.step})_k"
            )
        return self

    def is_parametric(self) -> bool:
        return any(f.is_parametric() for f in self.numerator + self.denominator)

    def specialize(self, a_power: int) -> "SeriesSpec":
        """Substitute a = q^a_power in every factor"""
        if not self.is_parametric():
            return self
        return self.model_copy(
            update={
                "numerator": tuple(f.specialize(a_power) for f in self.numerator),
                "denominator": tuple(f.specialize(a_power) for f in self.denominator),
            }
        )

    def last_index(self, n: int) -> int:
        return self.truncation.evaluate(n)

    def describe(self) -> str:
        top = ", ".join(str(f) for f in self.numerator)
        bottom = ", ".join(str(f) for f in self.denominator)
        return f"sum_k [{top}] q^({self.term_q_power}k) / [{bottom}], {self.truncation}"
