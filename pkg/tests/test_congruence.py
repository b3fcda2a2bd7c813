"""
Tests for divisibility checks, parametric vanishing, the classical
supercongruences and congruence reports
"""

import json
import unittest
from fractions import Fraction
from math import gcd
from unittest.mock import patch

from pydantic import ValidationError

from qfactors.congruence import (
    CongruenceReport,
    Engine,
    EngineDisagreementError,
    Verdict,
    check_divisibility,
    check_gz_rv,
    check_padic_rv,
    check_parametric,
    conj56_window_ok,
    gz_rv_check,
    padic_rv_check,
    padic_rv_sum,
    parametric_vanishes,
    residue_mod,
)
from qfactors.exact import LaurentPoly, Modulus, ModulusKind
from qfactors.series import (
    FAMILY_CATALOG,
    HALF,
    SpecError,
    family_conj56,
    family_main,
    family_parametric,
    family_triple,
    get_family,
)

q = LaurentPoly.monomial(1)


def _admissible(name, count, n_max=40, **params):
    entry = get_family(name)
    found = [n for n in range(2, n_max + 1) if entry.admissible(n, **params)]
    return found[:count]


class TestCheckDivisibility(unittest.TestCase):
    """Single divisibility checks"""

    def test_pass(self):
        """Test a divisible instance with each engine"""
        for engine in ("exact", "quotient", "both", None):
            report = check_divisibility(family_main(3, 1), 5, "phi2", engine)
            self.assertIs(report.verdict, Verdict.PASS, engine)
            self.assertIsNone(report.witness)
            self.assertEqual(report.modulus_label, "phi_pow(5,2)")
        self.assertIs(check_divisibility(family_main(3, 1), 5).engine, Engine.QUOTIENT)

    def test_smallest_instance(self):
        """Test n = 2, where the sum has two terms"""
        report = check_divisibility(family_main(3, 1), 2, engine="exact")
        self.assertIs(report.verdict, Verdict.PASS)

    def test_negative_control(self):
        """Test that an inadmissible n fails with a witness under both engines"""
        for engine in ("exact", "quotient", "both"):
            report = check_divisibility(family_main(3, 1), 4, "phi2", engine)
            self.assertIs(report.verdict, Verdict.FAIL, engine)
            self.assertTrue(report.witness)
            self.assertGreaterEqual(report.witness_degree, 0)
            self.assertLess(report.witness_degree, 4)
            self.assertTrue(report.leading_coefficients())

    def test_not_applicable(self):
        """Test a modulus that meets the denominator"""
        modulus = Modulus.custom(q**2 - 1)
        for engine in ("exact", "quotient"):
            report = check_divisibility(family_main(3, 1), 4, modulus, engine)
            self.assertIs(report.verdict, Verdict.NOT_APPLICABLE, engine)
            self.assertTrue(report.message)
        report = check_divisibility(family_main(3, 1), 4, modulus, "both")
        self.assertIs(report.verdict, Verdict.NOT_APPLICABLE)

    def test_report_fields(self):
        """Test family, parameters and the conjecture flag"""
        report = check_divisibility(
            family_main(2, -1, HALF), 5, "qint-phi", family="thm2-half", conjecture=True
        )
        self.assertEqual(report.family, "thm2-half")
        self.assertEqual(report.params, {"d": 2, "r": -1, "n": 5, "truncation": "upto_half"})
        self.assertTrue(report.conjecture)
        self.assertIs(report.engine, Engine.EXACT)
        self.assertEqual(report.modulus_label, "qint_phi(5)")

    def test_invalid_input(self):
        """Test rejected n, modulus names and engines"""
        with self.assertRaises(SpecError):
            check_divisibility(family_main(3, 1), 1)
        with self.assertRaises(ValueError):
            check_divisibility(family_main(3, 1), 5, "phi3")
        with self.assertRaises(ValueError):
            check_divisibility(family_main(3, 1), 5, engine="fastest")

    def test_engine_disagreement(self):
        """Test that diverging engines raise instead of reporting"""
        with patch(
            "qfactors.congruence.checker.divides_quotient",
            return_value=(LaurentPoly.one(), None),
        ):
            with self.assertRaises(EngineDisagreementError):
                check_divisibility(family_main(3, 1), 5, engine="both")

    def test_both_engines_with_composite_qint(self):
        """Test that a non-unit denominator in the quotient ring keeps the exact verdict"""
        spec = get_family("thm2-full").spec()
        for n in (9, 15):
            quotient = check_divisibility(spec, n, "qint-phi", "quotient")
            self.assertIs(quotient.verdict, Verdict.NOT_APPLICABLE, n)
            report = check_divisibility(spec, n, "qint-phi", "both")
            self.assertIs(report.verdict, Verdict.PASS, n)
            self.assertIs(report.engine, Engine.BOTH)


class TestTheoremSweeps(unittest.TestCase):
    """Finite sweeps over the proven families"""

    def test_main_family(self):
        """Test (q^r;q^d)^d q^dk / (q^d;q^d)^d modulo Phi_n^2 for d <= 6, n <= 30"""
        entry = get_family("main")
        for d in range(2, 7):
            for r in range(-5, d - 1):
                if gcd(r, d) != 1:
                    continue
                for n in range(2, 31):
                    if not entry.admissible(n, d=d, r=r):
                        continue
                    report = check_divisibility(family_main(d, r), n)
                    self.assertIs(report.verdict, Verdict.PASS, (d, r, n))

    def test_qint_phi(self):
        """Test both truncations of d=2, r=-1 modulo [n]Phi_n"""
        for n in range(3, 26, 2):
            for name in ("thm2-full", "thm2-half"):
                spec = get_family(name).spec()
                report = check_divisibility(spec, n, "qint-phi")
                self.assertIs(report.verdict, Verdict.PASS, (name, n))

    def test_step_six_and_nine(self):
        """Test the step-6 and step-9 triples at every admissible n up to 35 or 38"""
        limits = {
            "thm1-a": 35, "thm1-b": 35,
            "mod9-r1": 35, "mod9-r2": 35, "mod9-r4": 35,
            "mod9-neg-r1": 38, "mod9-neg-r2": 38, "mod9-neg-r4": 38,
        }
        for name, n_max in limits.items():
            entry = get_family(name)
            admissible = _admissible(name, n_max, n_max=n_max)
            self.assertGreaterEqual(len(admissible), 3, name)
            for n in admissible:
                report = check_divisibility(entry.spec(), n, entry.modulus)
                self.assertIs(report.verdict, Verdict.PASS, (name, n))

    def test_thm1_a_values(self):
        """Test n = 5, 11, 17 for (q,q,q^4;q^6)"""
        self.assertEqual(_admissible("thm1-a", 3), [5, 11, 17])
        for n in (5, 11, 17):
            report = check_divisibility(family_triple(6, (1, 1, 4)), n)
            self.assertIs(report.verdict, Verdict.PASS, n)


class TestConjectureScans(unittest.TestCase):
    """Finite checks of the open families"""

    def test_qint_squared(self):
        """Test d=2, r=-1 modulo [n]^2 for odd n up to 15"""
        for n in range(3, 16, 2):
            for name in ("conj1-full", "conj1-half"):
                entry = get_family(name)
                report = check_divisibility(entry.spec(), n, entry.modulus, conjecture=True)
                self.assertIs(report.verdict, Verdict.PASS, (name, n))

    def test_step_nine(self):
        """Test (q,q^2,q^6;q^9) and its negative companion"""
        for name in ("conj3", "conj4"):
            for n in _admissible(name, 31, n_max=31):
                report = check_divisibility(get_family(name).spec(), n)
                self.assertIs(report.verdict, Verdict.PASS, (name, n))

    def _scan_step_three_m(self, name, sign):
        entry = get_family(name)
        checked = 0
        for m in (1, 2, 3):
            for r in range(-6, 7):
                for n in range(2, 21):
                    if not entry.admissible(n, m=m, r=r) or gcd(3 * m, n) != 1:
                        continue
                    if not conj56_window_ok(m, r, n, sign):
                        continue
                    report = check_divisibility(entry.spec(m=m, r=r), n, conjecture=True)
                    self.assertIs(report.verdict, Verdict.PASS, (name, m, r, n))
                    checked += 1
        return checked

    def test_step_three_m(self):
        """Test (q^m, q^r, q^(2m-r);q^3m) inside the residue window"""
        self.assertGreater(self._scan_step_three_m("conj5", 1), 50)

    def test_step_three_m_negative(self):
        """Test (q^-m, q^r, q^(-2m-r);q^3m) inside the residue window"""
        self.assertGreater(self._scan_step_three_m("conj6", -1), 50)

    def test_step_three_reproduces_main(self):
        """Test that m = r = 1 gives the d = 3, r = 1 instances"""
        for n in (2, 5, 8):
            first = check_divisibility(family_conj56(1, 1, 1), n)
            second = check_divisibility(family_main(3, 1), n)
            self.assertEqual(first.verdict, second.verdict)
            self.assertIs(first.verdict, Verdict.PASS)


class TestParametric(unittest.TestCase):
    """Vanishing at a = q^n and a = q^-n"""

    def test_all_parametric_entries(self):
        """Test the three smallest admissible n of every parametric family"""
        samples = {
            "parametric": [
                {"d": 2, "r": -1}, {"d": 3, "r": 1}, {"d": 4, "r": 1}, {"d": 5, "r": 2},
                {"d": 6, "r": 1}, {"d": 6, "r": -1},
            ],
            "mod9-a5": [{"r": 1}, {"r": 2}, {"r": 4}],
            "mod9-a8": [{"r": 1}, {"r": 2}, {"r": 4}],
        }
        for name, entry in FAMILY_CATALOG.items():
            if not entry.parametric:
                continue
            for params in samples.get(name, [{}]):
                for n in _admissible(name, 3, n_max=32, **params):
                    spec = entry.spec(**params)
                    self.assertTrue(parametric_vanishes(spec, n), (name, params, n))

    def test_known_values(self):
        """Test the smallest admissible n of a few families"""
        self.assertEqual(_admissible("parametric", 3, d=3, r=1), [2, 5, 8])
        self.assertEqual(_admissible("parametric", 1, d=2, r=-1), [3])
        self.assertEqual(_admissible("thm1-b-param", 1), [7])
        self.assertEqual(_admissible("mod9-a8", 1, r=2), [7])
        self.assertEqual(_admissible("mod9-neg-a8-r2", 1), [11])

    def test_report(self):
        """Test pass and fail reports for the parametric check"""
        report = check_parametric(family_parametric(3, 1), 5)
        self.assertIs(report.verdict, Verdict.PASS)
        self.assertEqual(report.modulus_label, "aq_pair(5)")
        failing = check_parametric(family_parametric(2, -1), 2)
        self.assertIs(failing.verdict, Verdict.FAIL)
        self.assertTrue(failing.witness)
        self.assertFalse(parametric_vanishes(family_parametric(2, -1), 2))

    def test_requires_parameter(self):
        """Test that a-free specs are rejected"""
        with self.assertRaises(SpecError):
            parametric_vanishes(family_main(3, 1), 5)
        with self.assertRaises(SpecError):
            check_parametric(family_main(3, 1), 5)


class TestClassic(unittest.TestCase):
    """The p-adic supercongruence and its q-analogue"""

    def test_padic(self):
        """Test sum binom(2k,k)^2/16^k = (-1)^((p-1)/2) mod p^2"""
        self.assertEqual(padic_rv_sum(3), 8)
        for p in (3, 5, 7, 11, 13, 17, 19, 23):
            self.assertTrue(padic_rv_check(p), p)
        self.assertIs(check_padic_rv(13).verdict, Verdict.PASS)
        for bad in (2, 9, 1):
            with self.assertRaises(ValueError):
                padic_rv_sum(bad)

    def test_q_analogue(self):
        """Test the q-analogue modulo Phi_n^2 and [p]^2"""
        for n in range(3, 16, 2):
            self.assertTrue(gz_rv_check(n), n)
        report = check_gz_rv(7, ModulusKind.QINT_SQ)
        self.assertIs(report.verdict, Verdict.PASS)
        self.assertEqual(report.modulus_label, "qint_sq(7)")
        for bad in (2, 1, 8):
            with self.assertRaises(ValueError):
                gz_rv_check(bad)

    def test_residue_mod(self):
        """Test <x>_n for rational x"""
        self.assertEqual(residue_mod(0, 7), 0)
        self.assertEqual(residue_mod(Fraction(1, 3), 5), 2)
        self.assertEqual(residue_mod(Fraction(-1, 3), 5), 3)
        self.assertEqual(residue_mod("2/3", 7), 3)
        with self.assertRaises(ValueError):
            residue_mod(Fraction(1, 3), 6)
        with self.assertRaises(ValueError):
            residue_mod(1, 0)

    def test_window(self):
        """Test the 0 < <r/3m>_n <= (2n-1)/3 and (2n-5)/3 windows"""
        self.assertTrue(conj56_window_ok(1, 1, 5, 1))
        self.assertFalse(conj56_window_ok(1, 2, 5, 1))
        self.assertFalse(conj56_window_ok(1, 1, 6, 1))
        self.assertFalse(conj56_window_ok(1, 0, 5, 1))
        self.assertTrue(conj56_window_ok(1, -1, 7, -1))
        self.assertFalse(conj56_window_ok(1, 1, 7, -1))
        self.assertFalse(conj56_window_ok(2, 1, 7, -1))
        self.assertFalse(conj56_window_ok(1, -2, 7, -1))


class TestReport(unittest.TestCase):
    """CongruenceReport validation and serialization"""

    def test_witness_rules(self):
        """Test that fail needs a witness and pass forbids one"""
        with self.assertRaises(ValidationError):
            CongruenceReport(family="main", modulus_label="phi_pow(5,2)", verdict=Verdict.FAIL)
        with self.assertRaises(ValidationError):
            CongruenceReport(
                family="main",
                modulus_label="phi_pow(5,2)",
                verdict=Verdict.PASS,
                witness={"offset": 0, "coeffs": ["1"]},
            )

    def test_json_line(self):
        """Test that durations are only written on request"""
        report = CongruenceReport.with_witness(
            q**2 + 3,
            family="main",
            params={"d": 3, "r": 1, "n": 4},
            modulus_label="phi_pow(4,2)",
            elapsed_ms=1.5,
        )
        plain = json.loads(report.to_json_line())
        self.assertNotIn("elapsed_ms", plain)
        self.assertEqual(plain["verdict"], "fail")
        self.assertEqual(plain["witness"], {"offset": 0, "coeffs": ["3", "0", "1"]})
        self.assertEqual(plain["witness_degree"], 2)
        timed = json.loads(report.to_json_line(timings=True))
        self.assertEqual(timed["elapsed_ms"], 1.5)
        self.assertEqual(report.leading_coefficients(2), ["1", "0"])
        self.assertFalse(report.passed)

    def test_sort_key(self):
        """Test ordering by family, parameters and n"""
        reports = [
            CongruenceReport(family="main", params={"d": 3, "r": 1, "n": n}, modulus_label="m", verdict=Verdict.PASS)
            for n in (8, 2, 5)
        ]
        ordered = sorted(reports, key=CongruenceReport.sort_key)
        self.assertEqual([r.params["n"] for r in ordered], [2, 5, 8])


if __name__ == "__main__":
    unittest.main()
