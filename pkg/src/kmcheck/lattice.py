"""Lattice points of the simplex Delta(a) and the Mordell parallelepiped count.

All comparisons are done on the integer T(p) = 2A q(p) = sum (2 x_i + 1) b_i,
so q(p) < j/2 becomes T(p) < j A.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from math import prod
from typing import Iterator, Sequence

import numpy as np
from gmpy2 import mpq

from .brieskorn import BrieskornData
from .errors import InternalInconsistency, NotInSimplex, OutOfBox, UnsupportedDimension
from .exact import Rational

_INT64_SAFE = 2**62


@dataclass
class LatticeCensus:
    C: int
    mordell_value: int
    census: list[tuple[tuple[Rational, Rational], int]]
    half_integer_hits: list[tuple[int, ...]] = field(default_factory=list)

    def count(self, lo, hi) -> int:
        """N over the open interval (lo, hi); must be one of the census intervals."""
        key = (mpq(lo), mpq(hi))
        for interval, c in self.census:
            if interval == key:
                return c
        raise KeyError(f"({lo},{hi}) is not a census interval")


def _require_mordell_dim(data: BrieskornData) -> None:
    if data.n not in (3, 4):
        raise UnsupportedDimension(f"Mordell counting needs n in (3, 4), got n={data.n}")


def _simplex_bound(data: BrieskornData) -> int:
    # x in Delta  <=>  sum 2 x_i b_i < A*kappa = (n-2)A - u
    return (data.n - 2) * data.A - data.u


def simplex_count(data: BrieskornData) -> int:
    """C = #Delta(a), for any n >= 3.

    Enumerates all but one coordinate with pruning on the running sum and
    counts the remaining coordinate in closed form.
    """
    bound = _simplex_bound(data)
    if bound <= 0:
        return 0
    steps = sorted(2 * bi for bi in data.b)[::-1]
    last = steps.pop()

    def rec(i: int, room: int) -> int:
        if i == len(steps):
            return (room + last - 1) // last
        total = 0
        s = steps[i]
        while room > 0:
            total += rec(i + 1, room)
            room -= s
        return total

    return rec(0, bound)


def simplex_points(data: BrieskornData) -> Iterator[tuple[int, ...]]:
    """Every point of Delta(a), in lexicographic order."""
    bound = _simplex_bound(data)
    steps = [2 * bi for bi in data.b]

    def rec(i: int, room: int, prefix: tuple[int, ...]):
        if i == len(steps):
            yield prefix
            return
        x = 0
        while room - x * steps[i] > 0:
            yield from rec(i + 1, room - x * steps[i], prefix + (x,))
            x += 1

    if bound > 0:
        yield from rec(0, bound, ())


def in_simplex(data: BrieskornData, x: Sequence[int]) -> bool:
    if len(x) != data.n or any(xi < 0 for xi in x):
        return False
    return sum(2 * xi * bi for xi, bi in zip(x, data.b)) < _simplex_bound(data)


def degree_vector(data: BrieskornData, x: Sequence[int]) -> int:
    """d(x) = sum floor(x_i / a_i) for a point of Delta(a)."""
    if not in_simplex(data, x):
        raise NotInSimplex(f"{tuple(x)} is not in Delta{data.a}")
    return sum(xi // ai for xi, ai in zip(x, data.a))


def in_box(data: BrieskornData, p: Sequence[int]) -> bool:
    return len(p) == data.n and all(0 <= x < ai for x, ai in zip(p, data.a))


def q_value(data: BrieskornData, p: Sequence[int]) -> Rational:
    """q(p) = sum (x_i + 1/2)/a_i."""
    return mpq(sum((2 * x + 1) * bi for x, bi in zip(p, data.b)), 2 * data.A)


def involution(data: BrieskornData, p: Sequence[int]) -> tuple[int, ...]:
    """omega(p) = (a_1 - 1 - x_1, ..., a_n - 1 - x_n); q(omega(p)) = n - q(p)."""
    if not in_box(data, p):
        raise OutOfBox(f"{tuple(p)} is outside the box of {data.a}")
    return tuple(ai - 1 - x for x, ai in zip(p, data.a))


@dataclass
class _Profile:
    below: list[int]  # below[j] = #{p : T(p) < j A}, j = 0..2n
    hits: dict[int, list[tuple[int, ...]]]  # j -> points with T(p) = j A


def _profile(data: BrieskornData, chunks: int = 1) -> _Profile:
    """Cumulative counts of T over the parallelepiped at every multiple of A.

    The largest a_i is handled arithmetically; the others are laid out as a
    flat numpy array of partial sums.  ``chunks`` splits that array and the
    partial counts are added, which must not change the result.
    """
    n, A = data.n, data.A
    order = sorted(range(n), key=lambda i: data.a[i])
    last = order[-1]
    rest = order[:-1]
    dtype = np.int64 if 2 * n * A < _INT64_SAFE else object
    shape = [data.a[i] for i in rest]

    base = np.zeros(1, dtype=dtype)
    for i in rest:
        col = (2 * np.arange(data.a[i], dtype=dtype) + 1) * data.b[i]
        base = (base[:, None] + col[None, :]).ravel()
    base = base + data.b[last]
    step = 2 * data.b[last]
    a_last = data.a[last]

    js = np.arange(1, 2 * n, dtype=dtype)
    thresholds = js * A
    below = np.zeros(len(js), dtype=object)
    hits: dict[int, list[tuple[int, ...]]] = {}
    offset = 0
    for part in np.array_split(base, max(1, chunks)):
        if len(part) == 0:
            continue
        room = thresholds[:, None] - part[None, :]
        # #{x in [0, a_last) : part + step x < t} = clip(ceil(room / step), 0, a_last)
        cnt = np.clip(-((-room) // step), 0, a_last)
        below += cnt.sum(axis=1).astype(object)
        exact = (room >= 0) & (room % step == 0) & (room < step * a_last)
        for jj, col in zip(*np.nonzero(exact)):
            flat = offset + int(col)
            coords = np.unravel_index(flat, shape) if shape else ()
            point = [0] * n
            for i, c in zip(rest, coords):
                point[i] = int(c)
            point[last] = int(room[jj, col] // step)
            hits.setdefault(int(js[jj]), []).append(tuple(point))
        offset += len(part)
    total = prod(data.a)
    return _Profile([0] + [int(v) for v in below] + [total], hits)


def _mordell_sum(data: BrieskornData, prof: _Profile) -> int:
    n = data.n
    below = prof.below
    # r(q) = j  <=>  lo_j <= T < hi_j, with lo/hi as multiples of A.
    # n = 3: r = nearest_int(q) -> T in [(2j-1)A, (2j+1)A)
    # n = 4: r = floor_int(q)   -> T in [2jA, 2(j+1)A)
    def below_at(j2: int) -> int:
        return below[min(max(j2, 0), 2 * n)]

    s = 0
    for j in range(n + 1):
        if n == 3:
            cnt = below_at(2 * j + 1) - below_at(2 * j - 1)
        else:
            cnt = below_at(2 * j + 2) - below_at(2 * j)
        s += cnt * (j - 1) * (j - 2)
    return s


def mordell_sum(data: BrieskornData, chunks: int = 1) -> int:
    """S = sum over the parallelepiped of (r(q) - 1)(r(q) - 2).

    r is nearest_int for n = 3 and floor_int for n = 4.
    """
    _require_mordell_dim(data)
    return _mordell_sum(data, _profile(data, chunks))


def mordell_count(data: BrieskornData, chunks: int = 1) -> int:
    """C computed as S/4 from the parallelepiped sum."""
    s = mordell_sum(data, chunks)
    if s % 4:
        raise InternalInconsistency(f"Mordell sum {s} is not divisible by 4 for {data.a}")
    return s // 4


def _census(data: BrieskornData, prof: _Profile, C: int) -> LatticeCensus:
    n, A = data.n, data.A
    cut_step = 1 if n == 3 else 2
    cuts = list(range(0, 2 * n + 1, cut_step))
    intervals = []
    for lo, hi in zip(cuts, cuts[1:]):
        cnt = prof.below[hi] - prof.below[lo] - len(prof.hits.get(lo, ()))
        intervals.append(((mpq(lo, 2), mpq(hi, 2)), cnt))
    hit_points = sorted(p for j in sorted(prof.hits) for p in prof.hits[j])

    accounted = sum(c for _, c in intervals) + sum(len(prof.hits.get(j, ())) for j in cuts)
    if accounted != prod(data.a):
        raise InternalInconsistency(f"census does not cover the box for {data.a}")
    if n == 3 and (prof.hits.get(1) or prof.hits.get(5)):
        raise InternalInconsistency(f"q hit 1/2 or 5/2 for {data.a}")
    low = intervals[0][1]
    if low != C:
        raise InternalInconsistency(f"N_(0,{intervals[0][0][1]}) = {low} but C = {C} for {data.a}")
    return LatticeCensus(C, _mordell_sum(data, prof), intervals, hit_points)


def interval_census(data: BrieskornData, chunks: int = 1) -> LatticeCensus:
    """N_I over the open half-integer (n=3) or integer (n=4) partition of (0, n).

    Points where q lands exactly on a cut are left out of every interval
    and listed in ``half_integer_hits``, together with any other point where
    2q is an integer.
    """
    _require_mordell_dim(data)
    return _census(data, _profile(data, chunks), simplex_count(data))
