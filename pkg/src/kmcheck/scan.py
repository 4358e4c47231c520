"""Exhaustive range verification over pairwise coprime tuples."""
from __future__ import annotations

import logging
import multiprocessing as mp
import sys
import time
from dataclasses import dataclass, field
from itertools import islice
from typing import Callable, Iterable, Iterator

from . import lattice
from .brieskorn import derive, enumerate_tuples
from .errors import InternalInconsistency
from .invariants import km_verify

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class TupleResult:
    a: tuple[int, ...]
    A: int
    C: int
    mordell: int
    symmetric: bool
    km_pass: bool
    reason: str = ""

    @property
    def passed(self) -> bool:
        return self.km_pass and self.mordell == self.C and self.symmetric


def check_tuple(a: tuple[int, ...]) -> TupleResult:
    """km_verify plus the Mordell count and involution symmetry of the census."""
    data = derive(a)
    try:
        rep = km_verify(data)
        prof = lattice._profile(data)
        census = lattice._census(data, prof, rep.C)
    except InternalInconsistency as exc:
        return TupleResult(data.a, data.A, -1, -1, False, False, str(exc))
    counts = [c for _, c in census.census]
    symmetric = counts == counts[::-1]
    mordell = census.mordell_value // 4 if census.mordell_value % 4 == 0 else -1
    reasons = []
    if not rep.passed:
        reasons.append(f"km: F={rep.F} F'={rep.F_seifert_form} sigma={rep.sigma} C={rep.C}")
    if mordell != rep.C:
        reasons.append(f"mordell={census.mordell_value} vs 4C={4 * rep.C}")
    if not symmetric:
        reasons.append(f"census not symmetric: {counts}")
    return TupleResult(data.a, data.A, rep.C, mordell, symmetric, rep.passed, "; ".join(reasons))


@dataclass
class SweepSummary:
    n: int
    max_product: int
    checked: int = 0
    passed: int = 0
    first_failure: TupleResult | None = None
    failures: list[TupleResult] = field(default_factory=list)
    results: list[TupleResult] = field(default_factory=list)
    seconds: float = 0.0

    @property
    def all_passed(self) -> bool:
        return self.checked == self.passed


def _chunks(it: Iterable, size: int) -> Iterator[list]:
    it = iter(it)
    while chunk := list(islice(it, size)):
        yield chunk


def _check_chunk(chunk: list[tuple[int, ...]]) -> list[TupleResult]:
    return [check_tuple(a) for a in chunk]


def sweep(
    n: int,
    max_product: int,
    workers: int = 1,
    keep_results: bool = False,
    limit: int | None = None,
    progress: Callable[[int, float], None] | None = None,
    chunk_size: int = 256,
) -> SweepSummary:
    """Run check_tuple on every tuple of enumerate_tuples(n, max_product).

    Aggregation is order-independent; failures are reported sorted by tuple
    so the summary does not depend on ``workers``.
    """
    summary = SweepSummary(n, max_product)
    tuples = enumerate_tuples(n, max_product)
    if limit is not None:
        tuples = islice(tuples, limit)
    start = time.perf_counter()

    def consume(batch: list[TupleResult]):
        for r in batch:
            summary.checked += 1
            if r.passed:
                summary.passed += 1
            else:
                summary.failures.append(r)
            if keep_results:
                summary.results.append(r)
        if progress is not None:
            progress(summary.checked, time.perf_counter() - start)

    if workers <= 1:
        for chunk in _chunks(tuples, chunk_size):
            consume(_check_chunk(chunk))
    else:
        with mp.get_context("fork" if sys.platform != "win32" else "spawn").Pool(workers) as pool:
            for batch in pool.imap_unordered(_check_chunk, _chunks(tuples, chunk_size)):
                consume(batch)

    summary.failures.sort(key=lambda r: r.a)
    summary.results.sort(key=lambda r: r.a)
    summary.first_failure = summary.failures[0] if summary.failures else None
    summary.seconds = time.perf_counter() - start
    return summary
