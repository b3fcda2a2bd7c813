"""
Property-based tests for the exact arithmetic and the summation engines
"""

import unittest
from math import gcd

from hypothesis import assume, given, settings, strategies as st

from qfactors.congruence import Verdict, check_divisibility, conj56_window_ok
from qfactors.exact import LaurentPoly, RatFun, quotient_project
from qfactors.qfun import PochFactor, build_modulus, q_pochhammer
from qfactors.series import FAMILY_CATALOG, family_main, get_family, sum_exact, sum_quotient

PROPERTY_SETTINGS = settings(max_examples=30, deadline=None)

small_ints = st.integers(min_value=-5, max_value=5)
laurent = st.builds(LaurentPoly, st.integers(min_value=-3, max_value=3), st.lists(small_ints, max_size=6))
ordinary = st.builds(LaurentPoly, st.just(0), st.lists(small_ints, max_size=6))
nonzero_exponents = st.integers(min_value=-6, max_value=6).filter(lambda e: e != 0)


@st.composite
def main_instances(draw):
    """(d, r, n) with gcd(n, d) = 1, so every denominator is a unit modulo Phi_n"""
    d = draw(st.integers(min_value=2, max_value=5))
    r = draw(st.integers(min_value=-4, max_value=d - 2).filter(lambda r: gcd(r, d) == 1))
    n = draw(st.integers(min_value=2, max_value=10).filter(lambda n: gcd(n, d) == 1))
    return d, r, n


def _agreement_instances():
    """Admissible (spec, n) with n <= 12 from every a-free family whose step is prime to n"""
    instances = []
    for entry in FAMILY_CATALOG.values():
        if entry.parametric or entry.param_names:
            continue
        spec = entry.spec()
        instances += [(spec, n) for n in range(2, 13) if entry.admissible(n) and gcd(n, spec.step) == 1]
    main = get_family("main")
    for d in range(2, 7):
        for r in range(-5, d - 1):
            if gcd(r, d) == 1:
                instances += [(main.spec(d=d, r=r), n) for n in range(2, 13) if main.admissible(n, d=d, r=r)]
    for name, sign in (("conj5", 1), ("conj6", -1)):
        entry = get_family(name)
        for m in (1, 2):
            for r in range(-4, 5):
                instances += [
                    (entry.spec(m=m, r=r), n)
                    for n in range(2, 13)
                    if entry.admissible(n, m=m, r=r) and conj56_window_ok(m, r, n, sign)
                ]
    return instances


AGREEMENT_INSTANCES = _agreement_instances()


class TestLaurentProperties(unittest.TestCase):
    """Ring laws for Laurent polynomials"""

    @PROPERTY_SETTINGS
    @given(laurent, laurent, laurent)
    def test_ring_axioms(self, a, b, c):
        self.assertEqual((a + b) * c, a * c + b * c)
        self.assertEqual(a * b, b * a)
        self.assertEqual((a * b) * c, a * (b * c))
        self.assertTrue((a - a).is_zero())

    @PROPERTY_SETTINGS
    @given(laurent, nonzero_exponents)
    def test_times_binomial(self, a, e):
        self.assertEqual(a.times_binomial(e), a * LaurentPoly.binomial(e))

    @PROPERTY_SETTINGS
    @given(ordinary, ordinary)
    def test_division_identity(self, a, b):
        assume(not b.is_zero())
        quotient, remainder = a.divmod(b)
        self.assertEqual(quotient * b + remainder, a)
        self.assertLess(remainder.degree(), b.degree())

    @PROPERTY_SETTINGS
    @given(laurent, laurent)
    def test_gcd_divides(self, a, b):
        assume(not a.is_zero() and not b.is_zero())
        common = a.gcd(b)
        self.assertTrue(a.is_divisible_by(common))
        self.assertTrue(b.is_divisible_by(common))
        self.assertTrue(common.is_ordinary())


class TestRatFunProperties(unittest.TestCase):
    """Canonical forms"""

    @PROPERTY_SETTINGS
    @given(laurent, laurent, laurent)
    def test_canonical_form(self, num, den, common):
        assume(not den.is_zero() and not common.is_zero())
        value = RatFun.make(num, den)
        self.assertEqual(RatFun.make(value.num, value.den), value)
        self.assertEqual(RatFun.make(num * common, den * common), value)
        if not value.is_zero():
            self.assertEqual(value.den.leading_coefficient(), 1)
            self.assertNotEqual(value.den.coefficient(0), 0)


class TestQuotientProperties(unittest.TestCase):
    """Projection into Q[q]/(Phi_5^2)"""

    modulus = build_modulus("phi_pow", 5, 2)

    @PROPERTY_SETTINGS
    @given(laurent, laurent, st.sampled_from([1, 2, 3, 4, 6, 7]))
    def test_projection_is_a_homomorphism(self, a, b, e):
        x = RatFun.make(a, LaurentPoly.binomial(e))
        y = RatFun.from_poly(b)
        px, py = quotient_project(x, self.modulus), quotient_project(y, self.modulus)
        self.assertEqual(quotient_project(x + y, self.modulus), px + py)
        self.assertEqual(quotient_project(x * y, self.modulus), px * py)


class TestPochhammerProperties(unittest.TestCase):
    """(x;q^s)_(j+k) = (x;q^s)_j (x q^(sj);q^s)_k"""

    @PROPERTY_SETTINGS
    @given(
        st.integers(min_value=-4, max_value=4),
        st.integers(min_value=1, max_value=3),
        st.integers(min_value=0, max_value=4),
        st.integers(min_value=0, max_value=4),
    )
    def test_split(self, r, s, j, k):
        whole = q_pochhammer(PochFactor(q_exp=r, step=s), j + k).specialize(0)
        head = q_pochhammer(PochFactor(q_exp=r, step=s), j).specialize(0)
        tail = q_pochhammer(PochFactor(q_exp=r + s * j, step=s), k).specialize(0)
        self.assertEqual(whole, head * tail)


class TestEngineProperties(unittest.TestCase):
    """Both engines agree on random instances"""

    @settings(max_examples=50, deadline=None)
    @given(st.sampled_from(AGREEMENT_INSTANCES), st.sampled_from([1, 2]))
    def test_projection_matches_quotient_sum(self, instance, exponent):
        spec, n = instance
        modulus = build_modulus("phi_pow", n, exponent)
        self.assertEqual(sum_quotient(spec, n, modulus), quotient_project(sum_exact(spec, n), modulus))

    @settings(max_examples=20, deadline=None)
    @given(main_instances())
    def test_verdicts_agree(self, instance):
        d, r, n = instance
        report = check_divisibility(family_main(d, r), n, "phi2", "both")
        self.assertIn(report.verdict, (Verdict.PASS, Verdict.FAIL))
        if n % d == (-r) % d and n >= d - r:
            self.assertIs(report.verdict, Verdict.PASS)


if __name__ == "__main__":
    unittest.main()
