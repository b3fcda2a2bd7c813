"""
Divisibility Checker

Decides whether a truncated sum is congruent to 0 modulo one of the named
moduli, with either summation engine or both, and whether a parametric sum
vanishes at a = q^n and a = q^-n.
"""

import logging
import time
from typing import Any, Dict, Optional, Tuple, Union

from qfactors.exact.laurent import LaurentPoly
from qfactors.exact.quotient import Modulus, ModulusKind, NotAUnitError
from qfactors.qfun.moduli import build_modulus
from qfactors.series.spec import SeriesSpec, SpecError
from qfactors.series.summation import PartialSum, accumulate, sum_quotient
from qfactors.congruence.report import CongruenceReport, Engine, Verdict

logger = logging.getLogger(__name__)


class EngineDisagreementError(RuntimeError):
    """Raised when the exact and quotient engines reach different verdicts"""

    pass


# Command-line modulus names -> (kind, exponent)
MODULUS_CHOICES: Dict[str, Tuple[ModulusKind, int]] = {
    "phi": (ModulusKind.PHI_POW, 1),
    "phi2": (ModulusKind.PHI_POW, 2),
    "qint": (ModulusKind.QINT, 1),
    "qint-phi": (ModulusKind.QINT_PHI, 1),
    "qint-sq": (ModulusKind.QINT_SQ, 1),
}


def resolve_modulus(modulus: Union[Modulus, str], n: int) -> Modulus:
    """Accept a built modulus or one of the names in MODULUS_CHOICES"""
    if isinstance(modulus, Modulus):
        return modulus
    try:
        kind, exponent = MODULUS_CHOICES[modulus]
    except KeyError:
        raise ValueError(
            f"unknown modulus '{modulus}'; choose from {', '.join(MODULUS_CHOICES)}"
        )
    return build_modulus(kind, n, exponent)


def choose_engine(modulus: Modulus, engine: Union[Engine, str, None]) -> Engine:
    """``auto`` picks the quotient engine for powers of Phi_n, the exact one otherwise"""
    if engine in (None, "auto"):
        return Engine.QUOTIENT if modulus.kind is ModulusKind.PHI_POW else Engine.EXACT
    return Engine(engine)


def divides_exact(
    partial: PartialSum, modulus: Modulus
) -> Tuple[Optional[LaurentPoly], int, Optional[str]]:
    """
    Test a partial sum for divisibility by a modulus

    Cyclotomic factors of the modulus are cancelled between numerator and
    denominator first; any that remain in the denominator make the test
    inapplicable. The cleared numerator is then reduced modulo the modulus.

    Returns:
        Tuple: ``(remainder, q_shift, message)``; remainder is None when the
        denominator meets the modulus, and q_shift is the power of q used to
        clear negative exponents
    """
    if partial.is_zero():
        return LaurentPoly.zero(), 0, None
    # Named moduli: cancel only their own Phi_t, then look for leftovers
    if modulus.factors:
        numerator, remaining = partial.cancel_cyclotomic(t for t, _ in modulus.factors)
        blocking = sorted(t for t, _ in modulus.factors if remaining.get(t))
        if blocking:
            names = ", ".join(f"Phi_{t}" for t in blocking)
            return None, 0, f"denominator meets modulus: {names}"
    else:
        # Custom moduli: the whole denominator must be coprime
        common = partial.denominator.gcd(modulus.poly)
        if not common.is_one():
            return None, 0, f"denominator meets modulus: gcd {common}"
        numerator = partial.numerator
    # Clear negative powers of q before reducing
    shift = -numerator.offset
    return numerator.shift(shift).rem(modulus.poly), shift, None


def divides_quotient(
    spec: SeriesSpec, n: int, modulus: Modulus, a_power: Optional[int] = None
) -> Tuple[Optional[LaurentPoly], Optional[str]]:
    try:
        value = sum_quotient(spec, n, modulus, a_power)
    except NotAUnitError as exc:
        return None, str(exc)
    return value.residue, None


def _params(spec: SeriesSpec, n: int) -> Dict[str, Any]:
    params: Dict[str, Any] = dict(spec.params)
    params["n"] = n
    params["truncation"] = spec.truncation.kind.value
    return params


def check_divisibility(
    spec: SeriesSpec,
    n: int,
    modulus: Union[Modulus, str] = "phi2",
    engine: Union[Engine, str, None] = None,
    family: Optional[str] = None,
    conjecture: bool = False,
    a_power: Optional[int] = None,
) -> CongruenceReport:
    """
    Check a truncated sum for divisibility by a modulus

    Args:
        spec: The family member
        n: Index n >= 2 of the modulus and of the truncation
        modulus: A Modulus or one of phi, phi2, qint, qint-phi, qint-sq
        engine: exact, quotient, both, or None for the automatic choice
        family: Catalog name to record instead of ``spec.family``
        conjecture: Mark the report as a finite conjecture check
        a_power: s for a = q^s when the spec is parametric

    Returns:
        CongruenceReport: pass, fail with the remainder as witness, or
        not-applicable when the denominator is not coprime to the modulus

    Raises:
        EngineDisagreementError: If both engines run and disagree
    """
    if n < 2:
        raise SpecError(f"divisibility checks need n >= 2, got {n}")
    modulus = resolve_modulus(modulus, n)
    chosen = choose_engine(modulus, engine)
    fields: Dict[str, Any] = dict(
        family=family or spec.family,
        params=_params(spec, n),
        modulus_label=modulus.label,
        engine=chosen,
        conjecture=conjecture,
    )
    started = time.perf_counter()

    remainder: Optional[LaurentPoly] = None
    message: Optional[str] = None
    shift = 0
    if chosen in (Engine.EXACT, Engine.BOTH):
        remainder, shift, message = divides_exact(accumulate(spec, n, a_power), modulus)
    if chosen in (Engine.QUOTIENT, Engine.BOTH):
        residue, quotient_message = divides_quotient(spec, n, modulus, a_power)
        if chosen is Engine.QUOTIENT:
            remainder, message = residue, quotient_message
        elif residue is None:
            # Denominator not a unit in the quotient ring: the exact verdict stands
            logger.debug(f"{fields['family']} n={n}: quotient engine not run, {quotient_message}")
        elif _outcome(residue) != _outcome(remainder):
            raise EngineDisagreementError(
                f"{fields['family']} n={n} modulo {modulus.label}: exact engine says "
                f"{_outcome(remainder)}, quotient engine says {_outcome(residue)}"
            )
    fields["elapsed_ms"] = round((time.perf_counter() - started) * 1000, 3)

    if remainder is None:
        logger.warning(f"{fields['family']} n={n}: {message}")
        return CongruenceReport(verdict=Verdict.NOT_APPLICABLE, message=message, **fields)
    report = CongruenceReport.with_witness(remainder, q_shift=shift, **fields)
    logger.debug(
        f"{report.family} n={n} modulo {modulus.label}: {report.verdict.value} "
        f"({chosen.value}, {report.elapsed_ms} ms)"
    )
    return report


def _outcome(remainder: Optional[LaurentPoly]) -> str:
    if remainder is None:
        return Verdict.NOT_APPLICABLE.value
    return Verdict.PASS.value if remainder.is_zero() else Verdict.FAIL.value


def parametric_vanishes(spec: SeriesSpec, n: int) -> bool:
    """
    True iff the sum is identically zero at both a = q^n and a = q^-n

    Vanishing at both distinct roots means divisibility by (1 - aq^n)(a - q^n).
    """
    if not spec.is_parametric():
        raise SpecError(f"family {spec.family} does not depend on a")
    return all(accumulate(spec, n, s).is_zero() for s in (n, -n))


def check_parametric(
    spec: SeriesSpec, n: int, family: Optional[str] = None
) -> CongruenceReport:
    """Report form of parametric_vanishes, labelled aq_pair(n)"""
    if not spec.is_parametric():
        raise SpecError(f"family {spec.family} does not depend on a")
    started = time.perf_counter()
    witness = LaurentPoly.zero()
    for s in (n, -n):
        partial = accumulate(spec, n, s)
        if not partial.is_zero():
            witness = partial.numerator.unshifted()
            break
    elapsed = round((time.perf_counter() - started) * 1000, 3)
    return CongruenceReport.with_witness(
        witness,
        family=family or spec.family,
        params=_params(spec, n),
        modulus_label=f"aq_pair({n})",
        engine=Engine.EXACT,
        elapsed_ms=elapsed,
    )
