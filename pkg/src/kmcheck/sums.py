"""Dedekind sums s(h,k) and Dedekind-Rademacher sums s(h,k;x,y).

Two evaluation paths are provided.  Direct summation follows the definition
term by term and is the reference.  The fast path runs a Euclidean descent
using the Rademacher reciprocity law and is only ever trusted because the
test suite pins it to the direct path.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from gmpy2 import mpq

from .errors import NotCoprime, WrongParity
from .exact import HALF, ZERO, Rational, as_rational, sawtooth

_SIXTH = mpq(1, 6)
_QUARTER = mpq(1, 4)
_TWELFTH = mpq(1, 12)


@dataclass(frozen=True)
class RademacherParams:
    """Argument (h, k; x, y) of s(h,k;x,y)."""

    h: int
    k: int
    x: Rational = ZERO
    y: Rational = ZERO

    def __post_init__(self):
        if self.k < 1:
            raise ValueError(f"k must be >= 1, got {self.k}")
        object.__setattr__(self, "x", as_rational(self.x))
        object.__setattr__(self, "y", as_rational(self.y))


def _direct(h: int, k: int, x: Rational, y: Rational) -> Rational:
    # One common denominator for the whole sum: terms are ((a/D1)) ((b/D2))
    # with D1 = k*yd and D2 = k*yd*xd, and ((p/D)) = (2(p mod D) - D)/(2D).
    xn, xd = int(x.numerator), int(x.denominator)
    yn, yd = int(y.numerator), int(y.denominator)
    d1 = k * yd
    d2 = d1 * xd
    shift = k * yd * xn
    total = 0
    for mu in range(k):
        a = mu * yd + yn
        r1 = a % d1
        if r1 == 0:
            continue
        r2 = (h * a * xd + shift) % d2
        if r2 == 0:
            continue
        total += (2 * r1 - d1) * (2 * r2 - d2)
    return mpq(total, 4 * d1 * d2)


def dedekind_sum(h: int, k: int) -> Rational:
    """s(h,k) = sum over mu=1..k-1 of ((mu/k)) ((h mu/k)), by direct summation."""
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    return _direct(int(h), int(k), ZERO, ZERO)


def rademacher_sum(p: RademacherParams) -> Rational:
    """Direct summation of s(h,k;x,y) over mu mod k.

    Tolerates any h, including h not coprime to k.
    """
    return _direct(int(p.h), int(p.k), p.x, p.y)


def _bern2(x: Rational) -> Rational:
    f = mpq(x.numerator % x.denominator, x.denominator)
    return f * f - f + _SIXTH


def _saw(x: Rational) -> Rational:
    p, q = x.numerator, x.denominator
    if q == 1:
        return ZERO
    return mpq(2 * (p % q) - q, 2 * q)


def _fast(h: int, k: int, x: Rational, y: Rational) -> Rational:
    classical = x.denominator == 1 and y.denominator == 1
    acc = ZERO
    sign = 1
    while True:
        quo, h = divmod(h, k)
        if quo:
            x = x + quo * y
        if k == 1:
            return acc + sign * _saw(x) * _saw(y)
        if classical:
            rec = -_QUARTER + _TWELFTH * (mpq(h, k) + mpq(k, h) + mpq(1, h * k))
        else:
            rec = _saw(x) * _saw(y) + HALF * (
                mpq(h, k) * _bern2(y) + _bern2(h * y + k * x) / (h * k) + mpq(k, h) * _bern2(x)
            )
        acc = acc + rec if sign > 0 else acc - rec
        sign = -sign
        h, k, x, y = k, h, y, x


def rademacher_sum_fast(p: RademacherParams) -> Rational:
    """s(h,k;x,y) in O(log k) steps; requires gcd(h, k) = 1.

    Each step reduces h mod k (absorbing the quotient into x) and applies
    reciprocity s(h,k;x,y) + s(k,h;y,x) = R(h,k;x,y) to swap the roles of
    h and k, ending at k = 1 where the sum is the single term ((x))((y)).
    """
    h, k = int(p.h), int(p.k)
    if gcd(h, k) != 1:
        raise NotCoprime(f"gcd({h},{k}) != 1; use rademacher_sum")
    return _fast(h, k, p.x, p.y)


def dedekind_sum_fast(h: int, k: int) -> Rational:
    h, k = int(h), int(k)
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    if gcd(h, k) != 1:
        raise NotCoprime(f"gcd({h},{k}) != 1; use dedekind_sum")
    return _fast(h, k, ZERO, ZERO)


def reciprocity_rhs(h: int, k: int) -> Rational:
    """-1/4 + (h/k + k/h + 1/(hk))/12 for coprime h, k > 0."""
    return -_QUARTER + _TWELFTH * (mpq(h, k) + mpq(k, h) + mpq(1, h * k))


def check_identity_ele0(b: int, a: int) -> bool:
    """s(beta, a) == -s(b, a) where beta*b = -1 (mod a)."""
    if a < 1:
        raise ValueError(f"a must be >= 1, got {a}")
    if gcd(b, a) != 1:
        raise NotCoprime(f"gcd({b},{a}) != 1")
    beta = (-pow(b, -1, a)) % a if a > 1 else 0
    return dedekind_sum(beta, a) == -dedekind_sum(b, a)


def _check_index(data, i: int) -> int:
    if not 1 <= i <= data.n:
        raise IndexError(f"fiber index {i} outside 1..{data.n}")
    return i - 1


def check_identity_ele(data, i: int) -> bool:
    """Even-A identity relating the Seifert-form sum to s(b_i,a_i;1/2,1/2).

    s(beta, a; (gamma + beta/2)/a, -1/2)
        == -s(b, a; 1/2, 1/2) - ((q gamma + 1/2)/a) / 2
    with ``i`` 1-based.
    """
    if data.A % 2:
        raise WrongParity(f"A={data.A} is odd; identity needs A even")
    j = _check_index(data, i)
    a, b, beta, q, g = data.a[j], data.b[j], data.beta[j], data.q[j], data.gamma[j]
    lhs = rademacher_sum(RademacherParams(beta, a, mpq(2 * g + beta, 2 * a), -HALF))
    rhs = -rademacher_sum(RademacherParams(b, a, HALF, HALF)) - HALF * sawtooth(mpq(2 * q * g + 1, 2 * a))
    return lhs == rhs


def check_identity_ele1(data, i: int) -> bool:
    """Odd-A identity: s(beta, a; gamma/a, 0) + ((q gamma/a))/2 == -s(b, a; 1/2, 1/2)."""
    if data.A % 2 == 0:
        raise WrongParity(f"A={data.A} is even; identity needs A odd")
    j = _check_index(data, i)
    a, b, beta, q, g = data.a[j], data.b[j], data.beta[j], data.q[j], data.gamma[j]
    lhs = rademacher_sum(RademacherParams(beta, a, mpq(g, a), ZERO)) + HALF * sawtooth(mpq(q * g, a))
    return lhs == -rademacher_sum(RademacherParams(b, a, HALF, HALF))
