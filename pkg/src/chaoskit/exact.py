"""Small helpers for exact rational arithmetic with one square root.

Exact kernels store coefficients as q * sqrt(s) with q, s rational, so
every even-degree moment reduces to plain Fraction arithmetic; a value
only degrades to float when an odd power of sqrt(s) survives.
"""

from __future__ import annotations

import math
from fractions import Fraction

Real = Fraction | float


def exact_sqrt(x: Fraction) -> Fraction | None:
    """Rational square root of x >= 0, or None when irrational."""
    if x < 0:
        raise ValueError("exact_sqrt of negative value")
    num = math.isqrt(x.numerator)
    den = math.isqrt(x.denominator)
    if num * num == x.numerator and den * den == x.denominator:
        return Fraction(num, den)
    return None


def radical_scale(base: Real, radicand: Fraction, half_powers: int) -> Real:
    """base * sqrt(radicand)**half_powers, exact whenever possible."""
    if isinstance(base, Fraction) and base == 0:
        return base
    whole = radicand ** (half_powers // 2)
    if half_powers % 2 == 0:
        return base * whole if isinstance(base, Fraction) else base * float(whole)
    root = exact_sqrt(radicand)
    if root is not None and isinstance(base, Fraction):
        return base * whole * root
    return float(base) * float(whole) * math.sqrt(float(radicand))


def is_exact(value: Real) -> bool:
    return isinstance(value, Fraction)


def fmt(value: Real) -> str:
    """Exact rational string ("5/2", "3") or shortest float repr."""
    if isinstance(value, Fraction):
        return str(value)
    return repr(float(value))


def parse_number(text: str) -> Real:
    """Parse "3", "5/2", "0.25" exactly; fall back to float."""
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        return float(text)


def to_float(value: Real) -> float:
    return float(value)
