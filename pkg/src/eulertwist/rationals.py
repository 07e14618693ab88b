"""Exact rational scalars: parsing, q-brackets, and p-adic valuations.

Rationals are plain :class:`fractions.Fraction` values, which already keep
the lowest-terms / positive-denominator normal form we rely on for exact
equality.  The wire encoding is always the two-sided string "num/den",
e.g. "-4/1".
"""
from __future__ import annotations

import math
from fractions import Fraction

from .errors import PoleAtMinusOne
from .ntheory import is_prime

PLUS_INFINITY = math.inf


def parse_rational(text: str) -> Fraction:
    """Parse "a/b" or a bare integer string into an exact Fraction."""
    text = text.strip()
    if "/" in text:
        num, _, den = text.partition("/")
        return Fraction(int(num), int(den))
    return Fraction(int(text))


def format_rational(x: Fraction | int) -> str:
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def q_bracket(x: int, q: Fraction) -> Fraction:
    """The q-analogue (1 - q^x)/(1 - q) of x, with the q -> 1 limit x."""
    if x < 0:
        raise ValueError("q_bracket expects x >= 0")
    q = Fraction(q)
    if q == 1:
        return Fraction(x)
    return (1 - q**x) / (1 - q)


def q_bracket_neg(x: int, q: Fraction) -> Fraction:
    """The alternating q-analogue (1 - (-q)^x)/(1 + q)."""
    if x < 0:
        raise ValueError("q_bracket_neg expects x >= 0")
    q = Fraction(q)
    if q == -1:
        raise PoleAtMinusOne("q_bracket_neg has a pole at q = -1")
    return (1 - (-q) ** x) / (1 + q)


def int_valuation(n: int, p: int) -> int | float:
    """Exponent of p in n; PLUS_INFINITY for n = 0."""
    if n == 0:
        return PLUS_INFINITY
    v = 0
    n = abs(n)
    while n % p == 0:
        n //= p
        v += 1
    return v


def padic_valuation(a: Fraction | int, p: int) -> int | float:
    """v_p(a) with v_p(0) = PLUS_INFINITY, so |a|_p = p**(-v_p(a))."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    a = Fraction(a)
    if a == 0:
        return PLUS_INFINITY
    return int_valuation(a.numerator, p) - int_valuation(a.denominator, p)
