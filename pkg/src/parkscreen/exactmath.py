"""Exact integer and rational primitives used by every closed-form quantity.

All values are arbitrary-precision: ``Rational`` is :class:`fractions.Fraction`
(always in lowest terms, positive denominator), and binomial coefficients are
exact integers at any size.  Everything here is pure and immutable, so the
functions are safe to call from any number of threads.
"""

from __future__ import annotations

import math
from fractions import Fraction

Rational = Fraction

__all__ = ["Rational", "binomial", "factorial", "rational_pow"]


def binomial(n: int, k: int) -> int:
    """Exact binomial coefficient C(n, k), with C(n, k) = 0 for k > n.

    The k > n convention keeps summation loops uniform instead of forcing
    callers to clamp their index ranges.
    """
    if n < 0 or k < 0:
        raise ValueError(f"binomial requires nonnegative arguments, got ({n}, {k})")
    if k > n:
        return 0
    return math.comb(n, k)


def factorial(n: int) -> int:
    """Exact n! for nonnegative n."""
    if n < 0:
        raise ValueError(f"factorial requires a nonnegative argument, got {n}")
    return math.factorial(n)


def rational_pow(base: Rational, exp: int) -> Rational:
    """Exact nonnegative integer power of a rational; exp = 0 yields 1."""
    if exp < 0:
        raise ValueError(f"rational_pow requires a nonnegative exponent, got {exp}")
    return Fraction(base) ** exp
