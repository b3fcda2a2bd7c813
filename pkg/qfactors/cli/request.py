"""
Scan Requests

The validated description of one command-line run: which family, which
parameter values, which n, which modulus and engine, where to write.
"""

from typing import List, Optional, Tuple

from pydantic import BaseModel, Field, model_validator

from qfactors.congruence.checker import MODULUS_CHOICES


class UsageError(ValueError):
    """Raised for unknown families, malformed ranges and bad flag combinations"""

    pass


class ScanRequest(BaseModel):
    """Request model for verify and scan runs"""

    family: str
    d: List[int] = Field(default_factory=list)
    r: List[int] = Field(default_factory=list)
    m: List[int] = Field(default_factory=list)
    n_range: Tuple[int, int]
    modulus: Optional[str] = None
    engine: str = "auto"
    out: Optional[str] = None
    jobs: int = Field(default=1, ge=1)
    force_inadmissible: bool = False
    verbose: bool = False
    timings: bool = False

    @model_validator(mode="after")
    def _check(self) -> "ScanRequest":
        low, high = self.n_range
        if low > high:
            raise ValueError(f"empty n range {low}..{high}")
        if low < 1:
            raise ValueError(f"n must be positive, got {low}")
        if self.modulus is not None and self.modulus not in MODULUS_CHOICES:
            raise ValueError(
                f"unknown modulus '{self.modulus}'; choose from {', '.join(MODULUS_CHOICES)}"
            )
        if self.engine not in ("auto", "exact", "quotient", "both"):
            raise ValueError(f"unknown engine '{self.engine}'")
        return self

    def n_values(self) -> range:
        return range(self.n_range[0], self.n_range[1] + 1)
