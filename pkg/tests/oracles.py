"""Independent brute-force oracles built on fractions.Fraction only."""
from __future__ import annotations

import math
from fractions import Fraction
from itertools import product


def saw(x: Fraction) -> Fraction:
    if x.denominator == 1:
        return Fraction(0)
    return x - math.floor(x) - Fraction(1, 2)


def dr_sum(h, k, x=Fraction(0), y=Fraction(0)) -> Fraction:
    x, y = Fraction(x), Fraction(y)
    return sum((saw((mu + y) / k) * saw(h * (mu + y) / k + x) for mu in range(k)), Fraction(0))


def dedekind(h, k) -> Fraction:
    return sum((saw(Fraction(mu, k)) * saw(Fraction(h * mu, k)) for mu in range(1, k)), Fraction(0))


def seifert_by_search(a):
    A = math.prod(a)
    b = [A // ai for ai in a]
    beta = [next(x for x in range(ai) if (x * bi + 1) % ai == 0) for bi, ai in zip(b, a)]
    q = [next(x for x in range(ai) if (x + bi) % ai == 0) for bi, ai in zip(b, a)]
    return A, b, beta, q


def kappa(a) -> Fraction:
    return (len(a) - 2) - sum(Fraction(1, ai) for ai in a)


def simplex_brute(a) -> int:
    half_k = kappa(a) / 2
    if half_k <= 0:
        return 0
    box = [range(math.floor(ai * half_k) + 1) for ai in a]
    return sum(1 for x in product(*box) if sum(Fraction(xi, ai) for xi, ai in zip(x, a)) < half_k)


def q_of(a, p) -> Fraction:
    return sum(Fraction(2 * x + 1, 2 * ai) for x, ai in zip(p, a))


def mordell_brute(a) -> int:
    """sum over the box of (r-1)(r-2), r = round-half-up (n=3) or floor (n=4)."""
    total = 0
    for p in product(*[range(ai) for ai in a]):
        q = q_of(a, p)
        r = math.floor(q + Fraction(1, 2)) if len(a) == 3 else math.floor(q)
        total += (r - 1) * (r - 2)
    return total


def census_brute(a):
    """Counts of q in open intervals (j/2,(j+1)/2) and the points where 2q is an integer."""
    n = len(a)
    counts = [0] * (2 * n)
    hits = []
    for p in product(*[range(ai) for ai in a]):
        q2 = 2 * q_of(a, p)
        if q2.denominator == 1:
            hits.append(p)
        else:
            counts[math.floor(q2)] += 1
    return counts, hits


def tuples_brute(n, max_product):
    """Plain nested loops, no generator tricks."""
    def ok(t):
        return all(math.gcd(t[i], t[j]) == 1 for i in range(len(t)) for j in range(i + 1, len(t)))

    out = []
    N = max_product
    for a in range(2, N + 1):
        for b in range(a + 1, N // a + 1):
            for c in range(b + 1, N // (a * b) + 1):
                if n == 3:
                    if ok((a, b, c)):
                        out.append((a, b, c))
                    continue
                for d in range(c + 1, N // (a * b * c) + 1):
                    if ok((a, b, c, d)):
                        out.append((a, b, c, d))
    return out
