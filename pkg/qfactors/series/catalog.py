"""
Family Catalog

Constructors for every truncated sum family and the registry that maps a
family identifier to its constructor, its admissible n, its default modulus
and whether it is a theorem, a parametric identity or a conjecture.
"""

import logging
from collections import Counter
from dataclasses import dataclass, field
from math import gcd
from typing import Callable, Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

from qfactors.qfun.pochhammer import PochFactor
from qfactors.series.spec import FULL, HALF, SeriesSpec, SpecError, TruncationRule

logger = logging.getLogger(__name__)


def _merge(factors: Iterable[PochFactor]) -> Tuple[PochFactor, ...]:
    """Collapse repeated factors into multiplicities, keeping first-seen order"""
    counts: Counter = Counter()
    order: List[Tuple[int, int, int]] = []
    for f in factors:
        key = (f.a_exp, f.q_exp, f.step)
        if key not in counts:
            order.append(key)
        counts[key] += f.multiplicity
    return tuple(
        PochFactor(a_exp=a, q_exp=r, step=d, multiplicity=counts[(a, r, d)]) for a, r, d in order
    )


def _check_main(d: int, r: int) -> None:
    if d < 2:
        raise SpecError(f"d must be at least 2, got d={d}")
    if r > d - 2:
        raise SpecError(f"r must satisfy r <= d-2, got d={d}, r={r}")
    if gcd(r, d) != 1:
        raise SpecError(f"gcd(r, d) must be 1, got d={d}, r={r}")


def family_main(d: int, r: int, truncation: TruncationRule = FULL) -> SeriesSpec:
    """
    sum_k (q^r;q^d)_k^d q^(dk) / (q^d;q^d)_k^d

    Raises:
        SpecError: Unless d >= 2, r <= d-2 and gcd(r, d) = 1
    """
    _check_main(d, r)
    return SeriesSpec(
        family="main",
        params={"d": d, "r": r},
        step=d,
        numerator=(PochFactor(q_exp=r, step=d, multiplicity=d),),
        denominator=(PochFactor(q_exp=d, step=d, multiplicity=d),),
        term_q_power=d,
        truncation=truncation,
    )


def family_parametric(d: int, r: int, truncation: TruncationRule = FULL) -> SeriesSpec:
    """
    The a-decorated form of family_main used to prove it.

    Odd d: numerator a^(+-(d-1)) q^r, a^(+-(d-3)) q^r, ..., a^(+-2) q^r and q^r;
    denominator a^(+-(d-2)) q^d, ..., a^(+-1) q^d and q^d.
    Even d: numerator a^(+-(d-1)) q^r, ..., a^(+-1) q^r; denominator
    a^(+-(d-2)) q^d, ..., a^(+-2) q^d and (q^d;q^d)_k twice.
    """
    _check_main(d, r)
    numerator: List[PochFactor] = []
    denominator: List[PochFactor] = []
    low = 2 if d % 2 else 1
    for e in range(d - 1, low - 1, -2):
        numerator += [PochFactor(a_exp=e, q_exp=r, step=d), PochFactor(a_exp=-e, q_exp=r, step=d)]
    for e in range(d - 2, 0, -2):
        denominator += [PochFactor(a_exp=e, q_exp=d, step=d), PochFactor(a_exp=-e, q_exp=d, step=d)]
    if d % 2:
        numerator.append(PochFactor(q_exp=r, step=d))
        denominator.append(PochFactor(q_exp=d, step=d))
    else:
        denominator.append(PochFactor(q_exp=d, step=d, multiplicity=2))
    return SeriesSpec(
        family="parametric",
        params={"d": d, "r": r},
        step=d,
        numerator=_merge(numerator),
        denominator=_merge(denominator),
        term_q_power=d,
        truncation=truncation,
    )


def family_triple(
    step: int,
    exponents: Sequence[int],
    parametric: Optional[Tuple[Sequence[int], Sequence[int]]] = None,
    family: str = "triple",
) -> SeriesSpec:
    """
    sum_k (q^r1, q^r2, q^r3; q^step)_k q^(step*k) / (q^step;q^step)_k^3

    Args:
        step: 6 or 9
        exponents: The three q-exponents r1, r2, r3
        parametric: Optional ``(numerator a-exponents, denominator a-exponents)``,
            each a triple; the denominators are then (a^e q^step; q^step)_k
        family: Identifier recorded on the spec
    """
    if step not in (6, 9):
        raise SpecError(f"triple families use step 6 or 9, got {step}")
    exponents = tuple(exponents)
    if len(exponents) != 3:
        raise SpecError(f"expected three q-exponents, got {len(exponents)}")
    num_a, den_a = (0, 0, 0), (0, 0, 0)
    if parametric is not None:
        num_a, den_a = tuple(parametric[0]), tuple(parametric[1])
        if len(num_a) != 3 or len(den_a) != 3:
            raise SpecError("parametric a-exponents must be two triples")
    params = {f"r{i + 1}": e for i, e in enumerate(exponents)}
    params["step"] = step
    return SeriesSpec(
        family=family,
        params=params,
        step=step,
        numerator=_merge(PochFactor(a_exp=a, q_exp=r, step=step) for a, r in zip(num_a, exponents)),
        denominator=_merge(PochFactor(a_exp=a, q_exp=step, step=step) for a in den_a),
        term_q_power=step,
    )


def family_conj56(m: int, r: int, sign: int) -> SeriesSpec:
    """
    The step-3m triples: (q^m, q^r, q^(2m-r)) for sign +1 and
    (q^-m, q^r, q^(-2m-r)) for sign -1, over (q^3m;q^3m)_k^3
    """
    if m < 1:
        raise SpecError(f"m must be positive, got {m}")
    if sign not in (1, -1):
        raise SpecError(f"sign must be +1 or -1, got {sign}")
    step = 3 * m
    exponents = (sign * m, r, sign * 2 * m - r)
    return SeriesSpec(
        family="conj5" if sign == 1 else "conj6",
        params={"m": m, "r": r},
        step=step,
        numerator=_merge(PochFactor(q_exp=e, step=step) for e in exponents),
        denominator=(PochFactor(q_exp=step, step=step, multiplicity=3),),
        term_q_power=step,
    )


def family_gz_rv() -> SeriesSpec:
    """sum_k (q;q^2)_k^2 / (q^2;q^2)_k^2"""
    return SeriesSpec(
        family="gz-rv",
        step=2,
        numerator=(PochFactor(q_exp=1, step=2, multiplicity=2),),
        denominator=(PochFactor(q_exp=2, step=2, multiplicity=2),),
        term_q_power=0,
    )


@dataclass(frozen=True)
class ResidueRule:
    """n is admissible when n mod ``modulus`` lies in ``classes`` and n >= ``n_min``"""

    modulus: int
    classes: FrozenSet[int]
    n_min: int = 2

    def admits(self, n: int) -> bool:
        return n >= self.n_min and n % self.modulus in self.classes


@dataclass(frozen=True)
class FamilyEntry:
    """One catalog entry"""

    name: str
    build: Callable[..., SeriesSpec]
    rule: Callable[..., ResidueRule]
    param_names: Tuple[str, ...] = ()
    modulus: str = "phi2"
    role: str = "theorem"
    description: str = ""
    param_domains: Dict[str, Tuple[int, ...]] = field(default_factory=dict)

    @property
    def conjecture(self) -> bool:
        return self.role == "conjecture"

    @property
    def parametric(self) -> bool:
        return self.role == "parametric"

    def spec(self, **params: int) -> SeriesSpec:
        return self.build(**self._select(params))

    def admissible(self, n: int, **params: int) -> bool:
        return self.rule(**self._select(params)).admits(n)

    def _select(self, params: Dict[str, int]) -> Dict[str, int]:
        missing = [p for p in self.param_names if params.get(p) is None]
        if missing:
            raise SpecError(f"family {self.name} needs parameters {', '.join(missing)}")
        chosen = {p: params[p] for p in self.param_names}
        for p, allowed in self.param_domains.items():
            if chosen[p] not in allowed:
                raise SpecError(f"family {self.name} needs {p} in {sorted(allowed)}, got {chosen[p]}")
        return chosen


def _classes(modulus: int, *classes: int, n_min: int = 2) -> ResidueRule:
    return ResidueRule(modulus, frozenset(c % modulus for c in classes), n_min)


def _main_rule(d: int, r: int) -> ResidueRule:
    return _classes(d, -r, n_min=max(2, d - r))


def _odd() -> ResidueRule:
    return _classes(2, 1, n_min=3)


_SIX_PATTERN = ((5, -5, 0), (4, -4, 0))
_MOD9_PARAM = {
    "mod9-a5": lambda r: ((5, -5, 0), (1, -1, 0)),
    "mod9-a8": lambda r: ((8, -8, 0), (7, -7, 0)),
}


def _build_catalog() -> Dict[str, FamilyEntry]:
    entries = [
        FamilyEntry(
            "main", family_main, _main_rule, ("d", "r"),
            description="(q^r;q^d)^d q^dk / (q^d;q^d)^d, n = -r mod d",
        ),
        FamilyEntry(
            "thm2-full", lambda: family_main(2, -1), _odd, modulus="qint-phi",
            description="d=2, r=-1 summed to n-1, modulo [n]Phi_n",
        ),
        FamilyEntry(
            "thm2-half", lambda: family_main(2, -1, HALF), _odd, modulus="qint-phi",
            description="d=2, r=-1 summed to (n+1)/2, modulo [n]Phi_n",
        ),
        FamilyEntry(
            "thm1-a", lambda: family_triple(6, (1, 1, 4), family="thm1-a"),
            lambda: _classes(6, 5), description="(q,q,q^4;q^6), n = 5 mod 6",
        ),
        FamilyEntry(
            "thm1-b", lambda: family_triple(6, (-1, -1, -4), family="thm1-b"),
            lambda: _classes(6, 1), description="(q^-1,q^-1,q^-4;q^6), n = 1 mod 6",
        ),
        FamilyEntry(
            "mod9-r1", lambda: family_triple(9, (1, 1, 7), family="mod9-r1"),
            lambda: _classes(9, 2, 8), description="(q,q,q^7;q^9), n = 2,8 mod 9",
        ),
        FamilyEntry(
            "mod9-r2", lambda: family_triple(9, (2, 2, 5), family="mod9-r2"),
            lambda: _classes(9, 4, 7), description="(q^2,q^2,q^5;q^9), n = 4,7 mod 9",
        ),
        FamilyEntry(
            "mod9-r4", lambda: family_triple(9, (4, 4, 1), family="mod9-r4"),
            lambda: _classes(9, 5, 8), description="(q^4,q^4,q;q^9), n = 5,8 mod 9",
        ),
        FamilyEntry(
            "mod9-neg-r1", lambda: family_triple(9, (-1, -1, -7), family="mod9-neg-r1"),
            lambda: _classes(9, 5, n_min=10), description="(q^-1,q^-1,q^-7;q^9), n = 5 mod 9, n > 9",
        ),
        FamilyEntry(
            "mod9-neg-r2", lambda: family_triple(9, (-2, -2, -5), family="mod9-neg-r2"),
            lambda: _classes(9, 2, 5, n_min=10), description="(q^-2,q^-2,q^-5;q^9), n = 2,5 mod 9, n > 9",
        ),
        FamilyEntry(
            "mod9-neg-r4", lambda: family_triple(9, (-4, -4, -1), family="mod9-neg-r4"),
            lambda: _classes(9, 2, n_min=10), description="(q^-4,q^-4,q^-1;q^9), n = 2 mod 9, n > 9",
        ),
        FamilyEntry(
            "parametric", family_parametric, _main_rule, ("d", "r"), modulus="aq-pair",
            role="parametric", description="a-decorated main family, modulo (1-aq^n)(a-q^n)",
        ),
        FamilyEntry(
            "thm1-a-param", lambda: family_triple(6, (1, 1, 4), _SIX_PATTERN, family="thm1-a-param"),
            lambda: _classes(6, 5), modulus="aq-pair", role="parametric",
            description="(a^5q, q/a^5, q^4;q^6) / (a^4q^6, q^6/a^4, q^6;q^6), n = 5 mod 6",
        ),
        FamilyEntry(
            "thm1-b-param", lambda: family_triple(6, (-1, -1, -4), _SIX_PATTERN, family="thm1-b-param"),
            lambda: _classes(6, 1), modulus="aq-pair", role="parametric",
            description="(a^5/q, 1/(a^5q), q^-4;q^6) / (a^4q^6, q^6/a^4, q^6;q^6), n = 1 mod 6",
        ),
        FamilyEntry(
            "mod9-a5",
            lambda r: family_triple(9, (r, r, 9 - 2 * r), _MOD9_PARAM["mod9-a5"](r), family="mod9-a5"),
            lambda r: _classes(9, 2 * r), ("r",), modulus="aq-pair", role="parametric",
            description="(a^5q^r, q^r/a^5, q^(9-2r)) / (aq^9, q^9/a, q^9), n = 2r mod 9",
            param_domains={"r": (1, 2, 4)},
        ),
        FamilyEntry(
            "mod9-a8",
            lambda r: family_triple(9, (r, r, 9 - 2 * r), _MOD9_PARAM["mod9-a8"](r), family="mod9-a8"),
            lambda r: _classes(9, -r), ("r",), modulus="aq-pair", role="parametric",
            description="(a^8q^r, q^r/a^8, q^(9-2r)) / (a^7q^9, q^9/a^7, q^9), n = -r mod 9",
            param_domains={"r": (1, 2, 4)},
        ),
        FamilyEntry(
            "mod9-neg-a7-r1",
            lambda: family_triple(9, (-1, -1, -7), ((7, -7, 0), (5, -5, 0)), family="mod9-neg-a7-r1"),
            lambda: _classes(9, 5, n_min=10), modulus="aq-pair", role="parametric",
            description="(a^7/q, 1/(a^7q), q^-7) / (a^5q^9, q^9/a^5, q^9), n = 5 mod 9",
        ),
        FamilyEntry(
            "mod9-neg-a8-r2",
            lambda: family_triple(9, (-2, -2, -5), ((8, -8, 0), (7, -7, 0)), family="mod9-neg-a8-r2"),
            lambda: _classes(9, 2, n_min=10), modulus="aq-pair", role="parametric",
            description="(a^8q^-2, q^-2/a^8, q^-5) / (a^7q^9, q^9/a^7, q^9), n = 2 mod 9, n > 9",
        ),
        FamilyEntry(
            "mod9-neg-a5-r2",
            lambda: family_triple(9, (-2, -2, -5), ((5, -5, 0), (1, -1, 0)), family="mod9-neg-a5-r2"),
            lambda: _classes(9, 5, n_min=10), modulus="aq-pair", role="parametric",
            description="(a^5q^-2, q^-2/a^5, q^-5) / (aq^9, q^9/a, q^9), n = 5 mod 9, n > 9",
        ),
        FamilyEntry(
            "mod9-neg-a7-r4",
            lambda: family_triple(9, (-4, -4, -1), ((7, -7, 0), (5, -5, 0)), family="mod9-neg-a7-r4"),
            lambda: _classes(9, 2, n_min=10), modulus="aq-pair", role="parametric",
            description="(a^7q^-4, q^-4/a^7, q^-1) / (a^5q^9, q^9/a^5, q^9), n = 2 mod 9, n > 9",
        ),
        FamilyEntry(
            "conj1-full", lambda: family_main(2, -1), _odd, modulus="qint-sq", role="conjecture",
            description="d=2, r=-1 summed to n-1, modulo [n]^2",
        ),
        FamilyEntry(
            "conj1-half", lambda: family_main(2, -1, HALF), _odd, modulus="qint-sq", role="conjecture",
            description="d=2, r=-1 summed to (n+1)/2, modulo [n]^2",
        ),
        FamilyEntry(
            "conj3", lambda: family_triple(9, (1, 2, 6), family="conj3"),
            lambda: _classes(9, 4, 7), role="conjecture", description="(q,q^2,q^6;q^9), n = 4,7 mod 9",
        ),
        FamilyEntry(
            "conj4", lambda: family_triple(9, (-1, -2, -6), family="conj4"),
            lambda: _classes(9, 5), role="conjecture", description="(q^-1,q^-2,q^-6;q^9), n = 5 mod 9",
        ),
        FamilyEntry(
            "conj5", lambda m, r: family_conj56(m, r, 1), lambda m, r: _classes(3, 2), ("m", "r"),
            role="conjecture", description="(q^m, q^r, q^(2m-r);q^3m), n = 2 mod 3, <r/3m>_n window",
        ),
        FamilyEntry(
            "conj6", lambda m, r: family_conj56(m, r, -1), lambda m, r: _classes(3, 1), ("m", "r"),
            role="conjecture", description="(q^-m, q^r, q^(-2m-r);q^3m), n = 1 mod 3, <r/3m>_n window",
        ),
    ]
    return {entry.name: entry for entry in entries}


FAMILY_CATALOG: Dict[str, FamilyEntry] = _build_catalog()


def get_family(name: str) -> FamilyEntry:
    try:
        return FAMILY_CATALOG[name]
    except KeyError:
        raise SpecError(f"unknown family '{name}'; known: {', '.join(sorted(FAMILY_CATALOG))}")
