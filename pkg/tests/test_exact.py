"""
Tests for exact arithmetic: Laurent polynomials, rational functions and
quotient-ring residues
"""

import unittest
from fractions import Fraction

from qfactors.exact import (
    LaurentPoly,
    Modulus,
    NotAUnitError,
    NotDivisibleError,
    QuotientElem,
    RatFun,
    quotient_project,
)
from qfactors.exact.rational import integer_content, inverse, normalize

q = LaurentPoly.monomial(1)
PHI3 = LaurentPoly(0, (1, 1, 1))


class TestRational(unittest.TestCase):
    """Coefficient helpers"""

    def test_normalize_folds_integral_fractions(self):
        """Test that integral fractions become ints"""
        self.assertIsInstance(normalize(Fraction(4, 2)), int)
        self.assertEqual(normalize(Fraction(1, 2)), Fraction(1, 2))

    def test_inverse(self):
        """Test exact inverses and division by zero"""
        self.assertEqual(inverse(4), Fraction(1, 4))
        self.assertEqual(inverse(Fraction(1, 3)), 3)
        with self.assertRaises(ZeroDivisionError):
            inverse(0)

    def test_integer_content(self):
        """Test clearing denominators"""
        scale, ints = integer_content([Fraction(1, 2), Fraction(1, 3), 1])
        self.assertEqual(scale, 6)
        self.assertEqual(ints, (3, 2, 6))


class TestLaurentPoly(unittest.TestCase):
    """Laurent polynomial arithmetic"""

    def test_canonical_storage(self):
        """Test that zeros are trimmed and offsets adjusted"""
        p = LaurentPoly(-2, (0, 1, 0, 1, 0))
        self.assertEqual(p.offset, -1)
        self.assertEqual(p.coeffs, (1, 0, 1))
        self.assertEqual(str(p), "q + q^-1")
        self.assertEqual(LaurentPoly(5, (0, 0)), LaurentPoly.zero())
        self.assertEqual(LaurentPoly.zero().degree(), -1)

    def test_from_terms(self):
        """Test building from a sparse mapping"""
        p = LaurentPoly.from_terms({-1: 2, 3: Fraction(4, 2), 1: 0})
        self.assertEqual(p, LaurentPoly(-1, (2, 0, 0, 0, 2)))
        self.assertEqual(p.valuation(), -1)
        self.assertEqual(p.degree(), 3)
        self.assertIsInstance(p.coefficient(3), int)
        self.assertTrue(LaurentPoly.from_terms({2: 0}).is_zero())

    def test_binomial_and_printing(self):
        """Test 1 - q^e for both signs of e"""
        self.assertEqual(str(LaurentPoly.binomial(3)), "-q^3 + 1")
        p = LaurentPoly.binomial(-2)
        self.assertEqual(p.offset, -2)
        self.assertEqual(p.coeffs, (-1, 0, 1))

    def test_times_binomial_matches_multiplication(self):
        """Test the linear-time binomial product"""
        p = LaurentPoly(-1, (2, -1, 0, 3))
        for e in (-3, -1, 1, 4):
            self.assertEqual(p.times_binomial(e), p * LaurentPoly.binomial(e))
        self.assertEqual(p.times_binomial(2, Fraction(1, 2)), p * (1 - q**2 * Fraction(1, 2)))

    def test_ring_operations(self):
        """Test addition, subtraction and multiplication"""
        self.assertEqual((q + 1) * (q - 1), q**2 - 1)
        self.assertEqual(q**-2, LaurentPoly.monomial(-2))
        self.assertEqual(1 - q, -(q - 1))
        self.assertTrue((q - q).is_zero())
        with self.assertRaises(ValueError):
            (q + 1) ** -1

    def test_divmod(self):
        """Test Euclidean division"""
        quotient, remainder = (q**2 - 1).divmod(q - 1)
        self.assertEqual(quotient, q + 1)
        self.assertTrue(remainder.is_zero())
        quotient, remainder = (q**3 + 2).divmod(q**2 + 1)
        self.assertEqual(quotient, q)
        self.assertEqual(remainder, 2 - q)
        with self.assertRaises(ZeroDivisionError):
            q.divmod(LaurentPoly.zero())

    def test_exact_divide(self):
        """Test exact division with and without q-power shifts"""
        self.assertEqual((q**3 - q).exact_divide(q - 1), q**2 + q)
        self.assertEqual((q**-1 - q).exact_divide(1 - q), q**-1 + 1)
        with self.assertRaises(NotDivisibleError) as ctx:
            (q**2 + 1).exact_divide(q - 1)
        self.assertEqual(ctx.exception.remainder, LaurentPoly.constant(2))

    def test_gcd(self):
        """Test monic gcds with q-powers stripped"""
        self.assertEqual((q**2 - 1).gcd(q**2 + 2 * q + 1), q + 1)
        self.assertEqual((q**3 - q).gcd(q**2 - 1), q**2 - 1)
        self.assertEqual((2 * q + 2).gcd(4 * q + 4), q + 1)
        self.assertTrue((q**2 + 1).gcd(q + 1).is_one())

    def test_evaluate_and_substitute(self):
        """Test evaluation at rationals and q -> q^k"""
        self.assertEqual((q + q**-1).evaluate(2), Fraction(5, 2))
        self.assertEqual(PHI3.evaluate(1), 3)
        self.assertEqual((q + 2 * q**2).substitute(-1), q**-1 + 2 * q**-2)
        self.assertEqual((1 + q).substitute(3), 1 + q**3)
        with self.assertRaises(ValueError):
            q.substitute(0)

    def test_to_dict(self):
        """Test the serialized witness form"""
        self.assertEqual(
            (q**2 - Fraction(1, 2)).to_dict(), {"offset": 0, "coeffs": ["-1/2", "0", "1"]}
        )


class TestRatFun(unittest.TestCase):
    """Canonical rational functions"""

    def test_make_cancels_and_normalizes(self):
        """Test gcd cancellation, monic denominators and q-power handling"""
        self.assertEqual(RatFun.make(q**2 - 1, q - 1), RatFun.from_poly(q + 1))
        half = RatFun.make(LaurentPoly.one(), 2 * q + 2)
        self.assertEqual(half.den, q + 1)
        self.assertEqual(half.num, LaurentPoly.constant(Fraction(1, 2)))
        shifted = RatFun.make(q, q**2)
        self.assertTrue(shifted.is_polynomial())
        self.assertEqual(shifted.num, q**-1)

    def test_zero_denominator(self):
        """Test that zero denominators and inverting zero raise"""
        with self.assertRaises(ZeroDivisionError):
            RatFun.make(q, LaurentPoly.zero())
        with self.assertRaises(ZeroDivisionError):
            RatFun.zero().invert()

    def test_field_operations(self):
        """Test arithmetic in Q(q)"""
        x = RatFun.make(LaurentPoly.one(), 1 - q)
        y = RatFun.make(q, 1 - q)
        self.assertEqual(x + y, RatFun.make(1 + q, 1 - q))
        self.assertEqual(x * (1 - q), RatFun.one())
        self.assertEqual((x / y) * y, x)
        self.assertTrue((x - x).is_zero())
        self.assertEqual(x**-1, RatFun.from_poly(1 - q))

    def test_evaluate(self):
        """Test evaluation at a rational point"""
        self.assertEqual(RatFun.make(LaurentPoly.one(), 1 - q).evaluate(2), -1)
        with self.assertRaises(ZeroDivisionError):
            RatFun.make(LaurentPoly.one(), 1 - q).evaluate(1)


class TestQuotient(unittest.TestCase):
    """Residues modulo a polynomial"""

    def setUp(self):
        self.modulus = Modulus.custom(PHI3)

    def test_modulus_validation(self):
        """Test that moduli must be ordinary of positive degree"""
        with self.assertRaises(ValueError):
            Modulus.custom(LaurentPoly.constant(3))
        with self.assertRaises(ValueError):
            Modulus.custom(q**-1 + 1)
        self.assertEqual(self.modulus.label, "custom(q^2 + q + 1)")

    def test_powers_of_q(self):
        """Test residues of q^e, including negative e"""
        self.assertEqual(self.modulus.q_inverse, -1 - q)
        self.assertEqual(self.modulus.power_of_q(-1), -1 - q)
        self.assertTrue(self.modulus.element(q**3).is_one())
        self.assertEqual(self.modulus.power_of_q(4), q)
        self.assertEqual(self.modulus.reduce(q**-2), q)

    def test_inverse(self):
        """Test modular inverses and non-units"""
        inv = self.modulus.element(1 + q).inverse()
        self.assertEqual(inv.residue, -q)
        self.assertTrue((inv * (1 + q)).is_one())
        with self.assertRaises(NotAUnitError) as ctx:
            Modulus.custom(q**2 - 1).element(q - 1).inverse()
        self.assertEqual(ctx.exception.gcd, q - 1)

    def test_ring_operations(self):
        """Test arithmetic and modulus mismatch"""
        a = self.modulus.element(q + 2)
        b = self.modulus.element(q**2)
        self.assertEqual((a * b).residue, (q**3 + 2 * q**2).rem(PHI3))
        self.assertEqual((a - a).residue, LaurentPoly.zero())
        self.assertEqual(a.times_binomial(self.modulus.element(q)), a * (1 - q))
        with self.assertRaises(ValueError):
            a + Modulus.custom(q + 2).element(q)

    def test_quotient_project(self):
        """Test projecting rational functions"""
        value = RatFun.make(LaurentPoly.one(), 1 + q)
        self.assertEqual(quotient_project(value, self.modulus).residue, -q)
        self.assertTrue(quotient_project(RatFun.zero(), self.modulus).is_zero())
        self.assertIsInstance(quotient_project(RatFun.from_poly(q**5), self.modulus), QuotientElem)
        with self.assertRaises(NotAUnitError):
            quotient_project(RatFun.make(LaurentPoly.one(), PHI3 * (q + 2)), self.modulus)


if __name__ == "__main__":
    unittest.main()
