"""F, sigma, lambda and chi_SW of Brieskorn spheres, and the KM identity check."""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from gmpy2 import mpq

from . import lattice
from .brieskorn import BrieskornData
from .errors import UnsupportedDimension
from .exact import HALF, ZERO, Rational, sawtooth
from .sums import RademacherParams, _fast, rademacher_sum

# Formula constants, kept by name so tests can perturb them.
FF_DEDEKIND_COEFF = 4
FF_RADEMACHER_COEFF = 8
SIGMA_DEDEKIND_COEFF = 4
EPSILON_EVEN = 1
EPSILON_ODD = -2


@lru_cache(maxsize=1 << 17)
def _dr_fast(h: int, k: int, x: Rational, y: Rational) -> Rational:
    return _fast(h, k, x, y)


def _dr(h: int, k: int, x: Rational, y: Rational, fast: bool) -> Rational:
    if fast:
        return _dr_fast(h, k, x, y)
    return rademacher_sum(RademacherParams(h, k, x, y))


def _s_b(data: BrieskornData, fast: bool) -> list[Rational]:
    return [_dr(bi, ai, ZERO, ZERO, fast) for bi, ai in zip(data.b, data.a)]


def _s_b_half(data: BrieskornData, fast: bool) -> list[Rational]:
    return [_dr(bi, ai, HALF, HALF, fast) for bi, ai in zip(data.b, data.a)]


def _odd_correction(data: BrieskornData) -> Rational:
    return mpq(-1, data.A) if data.A % 2 else ZERO


def _ff(data, s_b, s_half) -> Rational:
    return 1 + _odd_correction(data) + FF_DEDEKIND_COEFF * sum(s_b) + FF_RADEMACHER_COEFF * sum(s_half)


def ff_invariant(data: BrieskornData, fast: bool = True) -> Rational:
    """F(a) = 1 [- 1/A if A odd] + 4 sum s(b_i,a_i) + 8 sum s(b_i,a_i;1/2,1/2)."""
    return _ff(data, _s_b(data, fast), _s_b_half(data, fast))


def ff_invariant_seifert_form(data: BrieskornData, fast: bool = True) -> Rational:
    """F(a) from the unsimplified expression in beta_i, q_i, gamma_i and rho.

    F = 1 [- 1/A if A odd] - 4 sum s(beta_i, a_i)
        - 4 sum [ (((q_i gamma_i + rho)/a_i)) + 2 s(beta_i, a_i; (gamma_i + beta_i rho)/a_i, -rho) ]
    """
    rho = data.rho
    total = 1 + _odd_correction(data)
    for ai, be, qi, gi in zip(data.a, data.beta, data.q, data.gamma):
        total -= 4 * _dr(be, ai, ZERO, ZERO, fast)
        shifted = _dr(be, ai, (gi + be * rho) / ai, -rho, fast)
        total -= 4 * (sawtooth((qi * gi + rho) / ai) + 2 * shifted)
    return total


def _sigma(data, s_b) -> Rational:
    n, A = data.n, data.A
    return (
        -1
        - mpq((n - 2) * A, 3)
        + mpq(1, 3 * A)
        + sum(mpq(bi, 3 * ai) for bi, ai in zip(data.b, data.a))
        - SIGMA_DEDEKIND_COEFF * sum(s_b)
    )


def signature(data: BrieskornData, fast: bool = True) -> Rational:
    """Milnor fiber signature: -1 - (n-2)A/3 + 1/(3A) + sum b_i/(3 a_i) - 4 sum s(b_i, a_i)."""
    return _sigma(data, _s_b(data, fast))


def casson(data: BrieskornData, fast: bool = True) -> Rational:
    return signature(data, fast) / 8


def chi_sw(data: BrieskornData) -> int:
    """chi_SW = -2 C; only meaningful for n = 3, 4 where every d(x) vanishes."""
    if data.n not in (3, 4):
        raise UnsupportedDimension(f"chi_SW = -2C is established only for n = 3, 4 (got n={data.n})")
    return -2 * lattice.simplex_count(data)


def epsilon(data: BrieskornData) -> int:
    return EPSILON_EVEN if data.A % 2 == 0 else EPSILON_ODD


def _closed_form(data, s_half) -> Rational:
    n, A = data.n, data.A
    return (
        -mpq((n - 2) * A, 3)
        + mpq(epsilon(data), 3 * A)
        + sum(mpq(bi, 3 * ai) for bi, ai in zip(data.b, data.a))
        + 8 * sum(s_half)
    )


def km_rhs_closed_form(data: BrieskornData, fast: bool = True) -> Rational:
    """-(n-2)A/3 + eps/(3A) + sum b_i/(3 a_i) + 8 sum s(b_i,a_i;1/2,1/2)."""
    return _closed_form(data, _s_b_half(data, fast))


def _divisible(x: Rational, d: int) -> bool:
    return x.denominator == 1 and x.numerator % d == 0


@dataclass
class KMReport:
    data: BrieskornData
    C: int
    F: Rational
    F_seifert_form: Rational
    sigma: Rational
    lambda_casson: Rational
    chi_sw: int
    lhs: int
    rhs: Rational
    rhs_closed_form: Rational
    epsilon: int
    div8_F: bool
    div8_sigma: bool
    div16_sum: bool
    verdict: str

    @property
    def passed(self) -> bool:
        return self.verdict == "pass"


def km_verify(data: BrieskornData, fast: bool = True) -> KMReport:
    """Evaluate every invariant of Sigma(a) and check -16 C = F + sigma.

    The verdict is "pass" only if the two F routes agree, F + sigma matches
    the closed form, -16 C equals it, F, sigma, lambda are integers with
    8 | F, 8 | sigma, 16 | F + sigma, and chi_SW - F/8 = lambda.
    """
    if data.n not in (3, 4):
        raise UnsupportedDimension(f"theorem verified only for n=3,4 (got n={data.n})")
    s_b = _s_b(data, fast)
    s_half = _s_b_half(data, fast)
    F = _ff(data, s_b, s_half)
    F2 = ff_invariant_seifert_form(data, fast)
    sigma = _sigma(data, s_b)
    lam = sigma / 8
    C = lattice.simplex_count(data)
    chi = -2 * C
    lhs = -16 * C
    rhs = F + sigma
    closed = _closed_form(data, s_half)
    div8_F = _divisible(F, 8)
    div8_sigma = _divisible(sigma, 8)
    div16 = _divisible(rhs, 16)
    ok = (
        F == F2
        and rhs == closed
        and lhs == rhs
        and div8_F
        and div8_sigma
        and div16
        and lam.denominator == 1
        and chi - F / 8 == lam
    )
    return KMReport(
        data, C, F, F2, sigma, lam, chi, lhs, rhs, closed, epsilon(data),
        div8_F, div8_sigma, div16, "pass" if ok else "fail",
    )
