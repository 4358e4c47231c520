"""Exact rational kernel.

``Rational`` is gmpy2's ``mpq``: arbitrary precision, always stored in lowest
terms with a positive denominator, immutable and hashable.  Everything else
in the package does its arithmetic on ``int`` and ``Rational`` only.
"""
from __future__ import annotations

import re

from gmpy2 import mpq

Rational = mpq

HALF = mpq(1, 2)
ZERO = mpq(0)

_RATIONAL_RE = re.compile(r"^\s*([+-]?\d+)\s*(?:/\s*(\d+)\s*)?$")


def rational(p: int, q: int = 1) -> Rational:
    if q == 0:
        raise ZeroDivisionError("zero denominator")
    return mpq(p, q)


def as_rational(x) -> Rational:
    if isinstance(x, str):
        return parse_rational(x)
    return mpq(x)


def parse_rational(text: str) -> Rational:
    """Parse ``"p"`` or ``"p/q"``; decimals and floats are rejected."""
    m = _RATIONAL_RE.match(text)
    if m is None:
        raise ValueError(f"not a rational of the form p/q: {text!r}")
    num, den = m.groups()
    return rational(int(num), int(den) if den is not None else 1)


def to_str(x) -> str:
    """Lowest-terms ``"p/q"``; integers render as ``"p"``."""
    x = mpq(x)
    if x.denominator == 1:
        return str(int(x.numerator))
    return f"{int(x.numerator)}/{int(x.denominator)}"


def floor_int(x) -> int:
    """Greatest integer <= x (rounds toward minus infinity)."""
    x = mpq(x)
    return int(x.numerator // x.denominator)


def nearest_int(r) -> int:
    """floor(r + 1/2); ties round up, so nearest_int(3/2) == 2."""
    r = mpq(r)
    return int((2 * r.numerator + r.denominator) // (2 * r.denominator))


def frac(x) -> Rational:
    """Fractional part x - floor(x), in [0, 1)."""
    x = mpq(x)
    return mpq(x.numerator % x.denominator, x.denominator)


def sawtooth(x) -> Rational:
    """((x)) = x - floor(x) - 1/2 off the integers and 0 on them."""
    x = mpq(x)
    p, q = x.numerator, x.denominator
    if q == 1:
        return ZERO
    return mpq(2 * (p % q) - q, 2 * q)


def is_integer(x) -> bool:
    return mpq(x).denominator == 1
