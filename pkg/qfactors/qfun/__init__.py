"""
q-Functions module: cyclotomic polynomials, q-integers, q-shifted factorials
and q-binomial coefficients
"""

from qfactors.qfun.binomial import q_binomial
from qfactors.qfun.cyclotomic import cyclotomic, cyclotomic_factorization, q_integer
from qfactors.qfun.identities import (
    cyclotomic_product_identity,
    cyclotomic_substitution_divides,
    qbino_identity_check,
    qint_product_identity,
)
from qfactors.qfun.moduli import build_modulus
from qfactors.qfun.pochhammer import AParamPoly, PochFactor, pochhammer_product, q_pochhammer

__all__ = [
    "AParamPoly",
    "PochFactor",
    "pochhammer_product",
    "build_modulus",
    "cyclotomic",
    "cyclotomic_factorization",
    "cyclotomic_product_identity",
    "cyclotomic_substitution_divides",
    "q_binomial",
    "q_integer",
    "q_pochhammer",
    "qbino_identity_check",
    "qint_product_identity",
]
