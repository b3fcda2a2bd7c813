"""
Rational Coefficients

Coefficients are Python ``int`` or ``fractions.Fraction``; integral fractions
are folded back to ``int`` so that integer-only polynomials stay on the fast
big-integer path.
"""

from fractions import Fraction
from math import lcm
from typing import Iterable, Tuple, Union

Rational = Union[int, Fraction]


def normalize(value: Rational) -> Rational:
    """Return ``value`` as an ``int`` when it is integral, else as a Fraction."""
    if isinstance(value, int):
        return value
    if isinstance(value, Fraction):
        return value.numerator if value.denominator == 1 else value
    value = Fraction(value)
    return value.numerator if value.denominator == 1 else value


def inverse(value: Rational) -> Rational:
    if value == 0:
        raise ZeroDivisionError("division by zero")
    if value in (1, -1):
        return int(value)
    return normalize(Fraction(1) / value)


def denominator_lcm(values: Iterable[Rational]) -> int:
    result = 1
    for value in values:
        if isinstance(value, Fraction):
            result = lcm(result, value.denominator)
    return result


def integer_content(values: Iterable[Rational]) -> Tuple[int, Tuple[int, ...]]:
    """
    Clear denominators of a coefficient sequence

    Returns:
        Tuple[int, Tuple[int, ...]]: ``(scale, ints)`` with ``ints[i] == scale * values[i]``
    """
    values = tuple(values)
    scale = denominator_lcm(values)
    return scale, tuple(int(v * scale) for v in values)

