"""
Congruence module: divisibility verdicts, parametric vanishing and the
classical supercongruence checks
"""

from qfactors.congruence.checker import (
    MODULUS_CHOICES,
    EngineDisagreementError,
    check_divisibility,
    check_parametric,
    choose_engine,
    divides_exact,
    parametric_vanishes,
    resolve_modulus,
)
from qfactors.congruence.classic import (
    check_gz_rv,
    check_padic_rv,
    conj56_window_ok,
    gz_rv_check,
    padic_rv_check,
    padic_rv_sum,
    residue_mod,
)
from qfactors.congruence.report import CongruenceReport, Engine, Verdict

__all__ = [
    "MODULUS_CHOICES",
    "EngineDisagreementError",
    "check_divisibility",
    "check_parametric",
    "choose_engine",
    "divides_exact",
    "parametric_vanishes",
    "resolve_modulus",
    "check_gz_rv",
    "check_padic_rv",
    "conj56_window_ok",
    "gz_rv_check",
    "padic_rv_check",
    "padic_rv_sum",
    "residue_mod",
    "CongruenceReport",
    "Engine",
    "Verdict",
]
