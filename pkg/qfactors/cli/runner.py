"""
Scan Runner

Expands a ScanRequest into independent instances, filters them by each
family's residue conditions, runs them (optionally on a process pool) and
returns the reports in a fixed order.
"""

import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import product
from math import gcd
from typing import Dict, List, Tuple

from pydantic import BaseModel, Field
from sympy import isprime, primerange

from qfactors.congruence.checker import check_divisibility, check_parametric
from qfactors.congruence.classic import check_gz_rv, check_padic_rv, conj56_window_ok
from qfactors.congruence.report import CongruenceReport, Verdict
from qfactors.exact.quotient import ModulusKind
from qfactors.qfun.identities import (
    cyclotomic_product_identity,
    cyclotomic_substitution_divides,
    qbino_identity_check,
    qint_product_identity,
)
from qfactors.series.catalog import FamilyEntry, get_family
from qfactors.series.spec import SpecError
from qfactors.cli.request import ScanRequest, UsageError

logger = logging.getLogger(__name__)

_CONJ56_SIGN = {"conj5": 1, "conj6": -1}


@dataclass(frozen=True)
class Task:
    """One (family, parameters, n) instance, small enough to ship to a worker"""

    family: str
    params: Tuple[Tuple[str, int], ...]
    n: int
    modulus: str
    engine: str


def _admissible(entry: FamilyEntry, params: Dict[str, int], n: int) -> bool:
    if not entry.admissible(n, **params):
        return False
    sign = _CONJ56_SIGN.get(entry.name)
    if sign is not None:
        return gcd(params["m"], n) == 1 and conj56_window_ok(params["m"], params["r"], n, sign)
    return True


def _parameter_grid(entry: FamilyEntry, request: ScanRequest) -> List[Dict[str, int]]:
    choices = []
    for name in entry.param_names:
        values = getattr(request, name)
        if not values:
            raise UsageError(f"family {entry.name} needs --{name}")
        choices.append(sorted(set(values)))
    grid = [dict(zip(entry.param_names, combo)) for combo in product(*choices)]
    for params in grid:
        try:
            entry.spec(**params)
        except SpecError as exc:
            raise UsageError(str(exc))
    return grid


def plan(
    request: ScanRequest, conjectures: bool
) -> Tuple[List[Task], List[CongruenceReport]]:
    """
    Expand a request into tasks

    Returns:
        Tuple: the tasks to run and, in verbose mode, skipped reports for the
        inadmissible n

    Raises:
        UsageError: For unknown families, a family of the wrong kind or
            missing parameters
    """
    try:
        entry = get_family(request.family)
    except SpecError as exc:
        raise UsageError(str(exc))
    if entry.conjecture != conjectures:
        command = "scan" if entry.conjecture else "verify"
        raise UsageError(f"family {entry.name} is run with the '{command}' command")
    # Parametric families are always checked at a = q^n and a = q^-n
    modulus = entry.modulus if entry.parametric else request.modulus or entry.modulus

    tasks: List[Task] = []
    skipped: List[CongruenceReport] = []
    for params in _parameter_grid(entry, request):
        for n in request.n_values():
            # Moduli need n >= 2
            if n < 2:
                continue
            if not _admissible(entry, params, n):
                if not request.force_inadmissible:
                    if request.verbose:
                        skipped.append(
                            CongruenceReport(
                                family=entry.name,
                                params={**params, "n": n},
                                modulus_label=modulus,
                                verdict=Verdict.SKIPPED,
                                conjecture=entry.conjecture,
                                message="inadmissible n",
                            )
                        )
                    continue
                # Negative control
                logger.warning(f"forcing inadmissible instance {entry.name} {params} n={n}")
            tasks.append(
                Task(entry.name, tuple(sorted(params.items())), n, modulus, request.engine)
            )
    logger.info(f"{entry.name}: {len(tasks)} instances planned")
    return tasks, skipped


def run_task(task: Task) -> CongruenceReport:
    """Run one instance; inapplicable forced instances come back as not-applicable"""
    entry = get_family(task.family)
    params = dict(task.params)
    try:
        spec = entry.spec(**params)
        logger.debug(f"n={task.n}: {spec.describe()}")
        if entry.parametric:
            return check_parametric(spec, task.n, family=entry.name)
        return check_divisibility(
            spec,
            task.n,
            task.modulus,
            engine=task.engine,
            family=entry.name,
            conjecture=entry.conjecture,
        )
    except SpecError as exc:
        return CongruenceReport(
            family=entry.name,
            params={**params, "n": task.n},
            modulus_label=task.modulus,
            verdict=Verdict.NOT_APPLICABLE,
            conjecture=entry.conjecture,
            message=str(exc),
        )


def execute(tasks: List[Task], jobs: int = 1) -> List[CongruenceReport]:
    """Run tasks sequentially or across ``jobs`` worker processes"""
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(run_task, tasks))
    return [run_task(task) for task in tasks]


def _run(request: ScanRequest, conjectures: bool) -> List[CongruenceReport]:
    tasks, skipped = plan(request, conjectures)
    reports = execute(tasks, request.jobs) + skipped
    reports.sort(key=CongruenceReport.sort_key)
    for report in reports:
        if report.verdict is Verdict.FAIL:
            log = logger.error if report.conjecture else logger.warning
            log(
                f"{report.family} {report.params} fails modulo {report.modulus_label}: "
                f"witness degree {report.witness_degree}, "
                f"leading coefficients {report.leading_coefficients()}"
            )
    return reports


def run_verify(request: ScanRequest) -> List[CongruenceReport]:
    """Check theorem and parametric families over the requested instances"""
    return _run(request, conjectures=False)


def run_conjecture_scan(request: ScanRequest) -> List[CongruenceReport]:
    """Check conjecture families; every report carries the conjecture flag"""
    return _run(request, conjectures=True)


def run_classic(n_min: int, n_max: int) -> List[CongruenceReport]:
    """The p-adic check for odd primes and the q-analogue for odd n in range"""
    reports = [check_padic_rv(p) for p in primerange(max(3, n_min), n_max + 1)]
    for n in range(max(3, n_min), n_max + 1):
        if n % 2:
            reports.append(check_gz_rv(n))
            if isprime(n):
                reports.append(check_gz_rv(n, ModulusKind.QINT_SQ))
    return reports


class IdentityReport(BaseModel):
    """Outcome of one identity suite"""

    identity: str
    checked: int = 0
    failures: List[Dict[str, int]] = Field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures


def run_identities(n_max: int, m_max: int = 6) -> List[IdentityReport]:
    """
    The q-binomial vanishing for j in [0, n-1], both cyclotomic product
    identities, and Phi_n(q) | Phi_n(q^m) for gcd(m, n) = 1
    """
    suites = {
        "qbino": [({"n": n, "j": j}, qbino_identity_check) for n in range(1, n_max + 1) for j in range(n)],
        "cyclotomic_product": [({"n": n}, cyclotomic_product_identity) for n in range(1, n_max + 1)],
        "qint_product": [({"n": n}, qint_product_identity) for n in range(2, n_max + 1)],
        "cyclotomic_substitution": [
            ({"n": n, "m": m}, cyclotomic_substitution_divides)
            for n in range(1, n_max + 1)
            for m in range(1, m_max + 1)
            if gcd(m, n) == 1
        ],
    }
    reports = []
    for name, cases in suites.items():
        report = IdentityReport(identity=name)
        for args, check in cases:
            report.checked += 1
            if not check(**args):
                report.failures.append(args)
        logger.info(f"{name}: {report.checked} checked, {len(report.failures)} failed")
        reports.append(report)
    return reports


def exit_code(reports: List[CongruenceReport]) -> int:
    """1 when any report failed, 0 otherwise"""
    return 1 if any(report.verdict is Verdict.FAIL for report in reports) else 0
