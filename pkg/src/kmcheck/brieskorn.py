"""Seifert data of the Brieskorn homology sphere Sigma(a_1, ..., a_n)."""
from __future__ import annotations

from dataclasses import dataclass
from math import gcd, prod
from typing import Iterator, Sequence

from gmpy2 import mpq

from .errors import BadGenerator, InternalInconsistency, NotPairwiseCoprime, TooFewFibers
from .exact import HALF, ZERO, Rational


@dataclass(frozen=True)
class BrieskornData:
    a: tuple[int, ...]
    A: int
    b: tuple[int, ...]
    beta: tuple[int, ...]
    q: tuple[int, ...]
    kappa: Rational
    ell: Rational
    u: int
    rho: Rational
    m: int
    gamma: tuple[int, ...]

    @property
    def n(self) -> int:
        return len(self.a)


def is_pairwise_coprime(a: Sequence[int]) -> bool:
    return all(gcd(a[i], a[j]) == 1 for i in range(len(a)) for j in range(i + 1, len(a)))


def _validate(a: Sequence[int]) -> None:
    if len(a) < 3:
        raise TooFewFibers(f"need at least 3 fibers, got {len(a)}")
    for i, ai in enumerate(a):
        if ai < 2:
            raise BadGenerator(f"a_{i + 1} = {ai} < 2")
    for i in range(len(a)):
        for j in range(i + 1, len(a)):
            if gcd(a[i], a[j]) != 1:
                raise NotPairwiseCoprime(i + 1, j + 1, a[i], a[j])


def derive(a: Sequence[int]) -> BrieskornData:
    """Validate ``a`` and compute every Seifert quantity of Sigma(a).

    beta_i solves beta_i b_i = -1 (mod a_i) and q_i = -b_i mod a_i, both
    normalized to [0, a_i).  m is kappa/(2 ell) - rho, which reduces to
    (u - (n-2)A - 2 rho)/2; it is asserted integral rather than truncated.
    """
    a = tuple(int(x) for x in a)
    _validate(a)
    n = len(a)
    A = prod(a)
    b = tuple(A // ai for ai in a)
    beta = tuple((-pow(bi % ai, -1, ai)) % ai for bi, ai in zip(b, a))
    q = tuple((-bi) % ai for bi, ai in zip(b, a))
    u = sum(b)
    kappa = (n - 2) - sum(mpq(1, ai) for ai in a)
    ell = mpq(-1, A)
    rho = HALF if A % 2 == 0 else ZERO
    m2 = u - (n - 2) * A - (1 if A % 2 == 0 else 0)
    if m2 % 2:
        raise InternalInconsistency(f"m is not an integer for {a}")
    m = m2 // 2
    if kappa / (2 * ell) != m + rho:
        raise InternalInconsistency(f"kappa/(2 ell) != m + rho for {a}")
    gamma = tuple((m * be) % ai for be, ai in zip(beta, a))
    return BrieskornData(a, A, b, beta, q, kappa, ell, u, rho, m, gamma)


def _min_tail_product(start: int, count: int) -> int:
    p = 1
    for x in range(start, start + count):
        p *= x
    return p


def enumerate_tuples(n: int, max_product: int) -> Iterator[tuple[int, ...]]:
    """Yield sorted pairwise coprime 2 <= a_1 < ... < a_n with product <= max_product.

    Output is in lexicographic order and each tuple appears once.
    """
    if n < 1:
        raise ValueError("n must be positive")

    def rec(prefix: tuple[int, ...], prefix_prod: int, start: int, left: int):
        if left == 0:
            yield prefix
            return
        x = start
        while prefix_prod * _min_tail_product(x, left) <= max_product:
            if all(gcd(x, y) == 1 for y in prefix):
                yield from rec(prefix + (x,), prefix_prod * x, x + 1, left - 1)
            x += 1

    yield from rec((), 1, 2, n)
