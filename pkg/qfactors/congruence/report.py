"""
Congruence Reports

The record produced for every checked instance, serialized one per line by
the command-line driver.
"""

from enum import Enum
from typing import Any, Dict, Optional

from pydantic import BaseModel, Field, model_validator

from qfactors.exact.laurent import LaurentPoly


class Verdict(str, Enum):
    PASS = "pass"
    FAIL = "fail"
    NOT_APPLICABLE = "not-applicable"
    SKIPPED = "skipped"


class Engine(str, Enum):
    EXACT = "exact"
    QUOTIENT = "quotient"
    BOTH = "both"


class CongruenceReport(BaseModel):
    """Outcome of one divisibility check"""

    family: str
    params: Dict[str, Any] = Field(default_factory=dict)
    modulus_label: str
    verdict: Verdict
    witness: Optional[Dict[str, Any]] = None
    witness_degree: Optional[int] = None
    elapsed_ms: Optional[float] = None
    engine: Engine = Engine.EXACT
    conjecture: bool = False
    q_shift: int = 0
    message: Optional[str] = None

    @model_validator(mode="after")
    def _check_witness(self) -> "CongruenceReport":
        if self.verdict is Verdict.FAIL and not self.witness:
            raise ValueError("a failing report needs a nonzero witness")
        if self.verdict is Verdict.PASS and self.witness:
            raise ValueError("a passing report cannot carry a witness")
        return self

    @classmethod
    def with_witness(cls, remainder: LaurentPoly, **fields: Any) -> "CongruenceReport":
        """Build a pass report for a zero remainder, a fail report otherwise"""
        if remainder.is_zero():
            return cls(verdict=Verdict.PASS, **fields)
        return cls(
            verdict=Verdict.FAIL,
            witness=remainder.to_dict(),
            witness_degree=remainder.degree(),
            **fields,
        )

    @property
    def passed(self) -> bool:
        return self.verdict in (Verdict.PASS, Verdict.SKIPPED)

    def sort_key(self) -> tuple:
        params = self.params
        return (
            self.family,
            params.get("d") or 0,
            params.get("r") or 0,
            params.get("m") or 0,
            params.get("n") or 0,
            str(params.get("truncation") or ""),
            self.modulus_label,
        )

    def leading_coefficients(self, count: int = 3) -> list:
        """Top coefficients of the witness, highest degree first"""
        if not self.witness:
            return []
        return list(reversed(self.witness["coeffs"]))[:count]

    def to_json_line(self, timings: bool = False) -> str:
        exclude = None if timings else {"elapsed_ms"}
        return self.model_dump_json(exclude=exclude)
