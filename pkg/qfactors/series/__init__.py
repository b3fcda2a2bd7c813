"""
Series module: truncated sum specifications, the family catalog and the
exact and quotient-ring summation engines
"""

from qfactors.series.catalog import (
    FAMILY_CATALOG,
    FamilyEntry,
    family_conj56,
    family_gz_rv,
    family_main,
    family_parametric,
    family_triple,
    get_family,
)
from qfactors.series.spec import (
    FULL,
    HALF,
    SeriesSpec,
    SpecError,
    TruncationKind,
    TruncationRule,
    truncation_bound,
)
from qfactors.series.summation import PartialSum, accumulate, sum_exact, sum_quotient, term_value

__all__ = [
    "FAMILY_CATALOG",
    "FamilyEntry",
    "family_conj56",
    "family_gz_rv",
    "family_main",
    "family_parametric",
    "family_triple",
    "get_family",
    "FULL",
    "HALF",
    "SeriesSpec",
    "SpecError",
    "TruncationKind",
    "TruncationRule",
    "truncation_bound",
    "PartialSum",
    "accumulate",
    "sum_exact",
    "sum_quotient",
    "term_value",
]
