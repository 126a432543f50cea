"""Rational scalars.

``fractions.Fraction`` already keeps ``num/den`` reduced with a positive
denominator, normalizes at construction and is immutable, so it serves as
the scalar type directly.  This module only adds the wire format.
"""

from fractions import Fraction
from numbers import Rational

Rat = Fraction

ZERO = Fraction(0)
ONE = Fraction(1)


def rat(value) -> Fraction:
    """Coerce ints, Fractions and ``"num/den"`` strings to a Fraction.

    Floats are rejected: there is no floating-point mode.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("bool is not a rational scalar")
    if isinstance(value, int) or isinstance(value, Rational):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rat(value)
    raise TypeError(f"cannot use {type(value).__name__} as an exact rational")


def parse_rat(text: str) -> Fraction:
    text = text.strip()
    num, sep, den = text.partition("/")
    try:
        if sep:
            return Fraction(int(num), int(den))
        return Fraction(int(num))
    except (ValueError, ZeroDivisionError):
        raise ValueError(f"not a rational literal: {text!r}") from None


def format_rat(q: Fraction) -> str:
    """``"num/den"``, or ``"num"`` when the denominator is 1."""
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def common_denominator(values) -> int:
    from math import lcm

    den = 1
    for v in values:
        den = lcm(den, v.denominator)
    return den
