"""kmcheck command line.

Exit codes: 0 success / all checks pass, 1 a mathematical check failed,
2 invalid input or configuration.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import os
import random
import sys
import time
from dataclasses import dataclass
from math import gcd
from typing import Sequence

from . import lattice, plotting
from .brieskorn import derive
from .errors import InternalInconsistency, KMError, NotCoprime
from .exact import parse_rational, to_str
from .invariants import KMReport, km_verify
from .scan import sweep
from .sums import RademacherParams, rademacher_sum, rademacher_sum_fast

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

INFO_FIELDS = [
    "a", "A", "b", "beta", "q", "kappa", "rho", "m", "gamma", "C", "F", "F_seifert_form",
    "sigma", "lambda", "chi_sw", "lhs", "rhs", "epsilon", "div8_F", "div8_sigma",
    "div16_sum", "verdict",
]
VERIFY_FIELDS = ["n", "max_product", "checked", "passed", "first_failure", "verdict"]
BENCH_FIELDS = ["k", "direct_time", "fast_time", "values_equal"]

CSV_HELP = f"""\
CSV columns (fixed order):
  info:    {",".join(INFO_FIELDS)}   (lists are space separated)
  verify:  {",".join(VERIFY_FIELDS)}
  lattice: a,C,mordell_value,interval_lo,interval_hi,count   (one row per interval)
  bench:   {",".join(BENCH_FIELDS)}
"""


@dataclass
class RunConfig:
    command: str
    tuple: list[int] | None = None
    n: int | None = None
    max_product: int | None = None
    output_format: str = "json"
    workers: int = 1
    seed: int = 0


class UsageError(Exception):
    pass


def report_to_dict(rep: KMReport) -> dict:
    d = rep.data
    return {
        "a": list(d.a),
        "A": d.A,
        "b": list(d.b),
        "beta": list(d.beta),
        "q": list(d.q),
        "kappa": to_str(d.kappa),
        "rho": to_str(d.rho),
        "m": d.m,
        "gamma": list(d.gamma),
        "C": rep.C,
        "F": to_str(rep.F),
        "F_seifert_form": to_str(rep.F_seifert_form),
        "sigma": to_str(rep.sigma),
        "lambda": to_str(rep.lambda_casson),
        "chi_sw": rep.chi_sw,
        "lhs": rep.lhs,
        "rhs": to_str(rep.rhs),
        "epsilon": rep.epsilon,
        "div8_F": rep.div8_F,
        "div8_sigma": rep.div8_sigma,
        "div16_sum": rep.div16_sum,
        "verdict": rep.verdict,
    }


def census_to_dict(data, census: lattice.LatticeCensus) -> dict:
    return {
        "a": list(data.a),
        "C": census.C,
        "mordell_value": census.mordell_value,
        "census": [
            {"interval": [to_str(lo), to_str(hi)], "count": c} for (lo, hi), c in census.census
        ],
        "half_integer_hits": [
            {"point": list(p), "q": to_str(lattice.q_value(data, p))} for p in census.half_integer_hits
        ],
    }


def dumps(obj) -> str:
    return json.dumps(obj, separators=(",", ":"))


def _cell(v) -> str:
    if isinstance(v, list):
        return " ".join(str(x) for x in v)
    if isinstance(v, bool):
        return "true" if v else "false"
    if v is None:
        return ""
    return str(v)


def _csv(fields: Sequence[str], rows: Sequence[dict]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(fields)
    for r in rows:
        w.writerow([_cell(r[f]) for f in fields])
    return buf.getvalue().rstrip("\n")


def _text(d: dict) -> str:
    width = max(len(k) for k in d)
    return "\n".join(f"{k:<{width}}  {_cell(v)}" for k, v in d.items())


def _emit(fmt: str, fields: Sequence[str], rows: list[dict]) -> None:
    if fmt == "json":
        out = dumps(rows[0] if len(rows) == 1 else rows)
    elif fmt == "csv":
        out = _csv(fields, rows)
    else:
        out = "\n\n".join(_text(r) for r in rows)
    print(out)


def cmd_info(args) -> int:
    data = derive(args.tuple)
    rep = km_verify(data)
    _emit(args.format, INFO_FIELDS, [report_to_dict(rep)])
    return EXIT_OK if rep.passed else EXIT_FAIL


def cmd_verify(args) -> int:
    if args.n not in (3, 4):
        raise UsageError(f"theorem verified only for n=3,4 (got --n {args.n})")
    if args.max_product < 2**args.n:
        raise UsageError(f"--max-product must be at least 2^n = {2**args.n}")

    last = [0.0]

    def progress(done: int, elapsed: float):
        if elapsed - last[0] >= 2.0:
            last[0] = elapsed
            print(f"[verify] {done} tuples, {done / elapsed:.0f} tuples/s", file=sys.stderr, flush=True)

    summary = sweep(
        args.n, args.max_product, workers=args.workers, keep_results=bool(args.plot),
        progress=None if args.quiet else progress,
    )
    if not args.quiet:
        rate = summary.checked / summary.seconds if summary.seconds else 0.0
        print(f"[verify] done: {summary.checked} tuples in {summary.seconds:.1f}s ({rate:.0f}/s)", file=sys.stderr)
    ff = summary.first_failure
    row = {
        "n": args.n,
        "max_product": args.max_product,
        "checked": summary.checked,
        "passed": summary.passed,
        "first_failure": None if ff is None else list(ff.a),
        "verdict": "pass" if summary.all_passed else "fail",
    }
    _emit(args.format, VERIFY_FIELDS, [row])
    if ff is not None:
        print(f"[verify] first failure {ff.a}: {ff.reason}", file=sys.stderr)
    if args.plot:
        plotting.sweep_figure(summary.results, args.plot, title=f"n={args.n}, A <= {args.max_product}")
    return EXIT_OK if summary.all_passed else EXIT_FAIL


def cmd_sums(args) -> int:
    if args.k < 1:
        raise UsageError("k must be >= 1")
    try:
        x = parse_rational(args.x)
        y = parse_rational(args.y)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    p = RademacherParams(args.h, args.k, x, y)
    if args.fast:
        try:
            value = rademacher_sum_fast(p)
        except NotCoprime:
            print("[sums] gcd(h,k) != 1, falling back to direct summation", file=sys.stderr)
            value = rademacher_sum(p)
        else:
            if not args.no_check and value != rademacher_sum(p):
                print(f"[sums] fast path {to_str(value)} disagrees with direct summation", file=sys.stderr)
                return EXIT_FAIL
    else:
        value = rademacher_sum(p)
    if args.format == "json":
        print(dumps({"h": args.h, "k": args.k, "x": to_str(x), "y": to_str(y), "value": to_str(value)}))
    else:
        print(to_str(value))
    return EXIT_OK


def cmd_lattice(args) -> int:
    data = derive(args.tuple)
    census = lattice.interval_census(data)
    if census.mordell_value != 4 * census.C:
        print(f"[lattice] mordell value {census.mordell_value} != 4C = {4 * census.C}", file=sys.stderr)
        return EXIT_FAIL
    d = census_to_dict(data, census)
    if args.format == "json":
        print(dumps(d))
    elif args.format == "csv":
        rows = [
            {"a": d["a"], "C": d["C"], "mordell_value": d["mordell_value"],
             "interval_lo": c["interval"][0], "interval_hi": c["interval"][1], "count": c["count"]}
            for c in d["census"]
        ]
        print(_csv(["a", "C", "mordell_value", "interval_lo", "interval_hi", "count"], rows))
    else:
        print(f"Sigma{data.a}: C = {census.C}, mordell value = {census.mordell_value}")
        for c in d["census"]:
            print(f"  N({c['interval'][0]},{c['interval'][1]}) = {c['count']}")
        for h in d["half_integer_hits"]:
            print(f"  hit {tuple(h['point'])} with q = {h['q']}")
    if args.plot:
        plotting.census_figure(census, args.plot, label=f"Sigma{data.a}")
    return EXIT_OK


def _bench_ks(max_k: int) -> list[int]:
    ks, k = [], 2
    while k < max_k:
        ks.append(k)
        k *= 2
    ks.append(max_k)
    return ks


def _timed(fn, reps: int):
    t0 = time.perf_counter()
    for _ in range(reps):
        v = fn()
    return v, (time.perf_counter() - t0) / reps


def bench_rows(max_k: int, trials: int, seed: int) -> list[dict]:
    rng = random.Random(seed)
    rows = []
    for k in _bench_ks(max_k):
        direct_t = fast_t = 0.0
        equal = True
        for _ in range(trials):
            h = rng.randrange(1, k + 1)
            while gcd(h, k) != 1:
                h = rng.randrange(1, k + 1)
            p = RademacherParams(
                h, k, parse_rational(f"{rng.randint(-5, 5)}/{rng.choice([1, 2, 3, 2 * k])}"),
                parse_rational(f"{rng.randint(-5, 5)}/{rng.choice([1, 2, 5])}"),
            )
            slow, dt = _timed(lambda: rademacher_sum(p), 3)
            fast, ft = _timed(lambda: rademacher_sum_fast(p), 5)
            direct_t += dt
            fast_t += ft
            equal = equal and slow == fast
        rows.append({"k": k, "direct_time": f"{direct_t / trials:.3e}",
                     "fast_time": f"{fast_t / trials:.3e}", "values_equal": equal})
    return rows


def cmd_bench(args) -> int:
    if args.max_k < 2:
        raise UsageError("--max-k must be >= 2")
    if args.trials < 1:
        raise UsageError("--trials must be >= 1")
    rows = bench_rows(args.max_k, args.trials, args.seed)
    if args.format == "json":
        print(dumps(rows))
    else:
        print(_csv(BENCH_FIELDS, rows))
    if args.plot:
        plotting.bench_figure(
            [{"k": r["k"], "direct_time": float(r["direct_time"]), "fast_time": float(r["fast_time"])} for r in rows],
            args.plot,
        )
    return EXIT_OK if all(r["values_equal"] for r in rows) else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    def common(fmt: str = "json") -> argparse.ArgumentParser:
        # fresh parent per subcommand: parents share Action objects, so one
        # shared parent would leak format defaults between subcommands
        c = argparse.ArgumentParser(add_help=False)
        c.add_argument("--format", choices=["json", "csv", "text"], default=fmt)
        c.add_argument("--workers", type=int, default=os.cpu_count() or 1)
        c.add_argument("--seed", type=int, default=0)
        c.add_argument("--plot", metavar="PNG", help="also write a figure to this file")
        return c

    parser = argparse.ArgumentParser(
        prog="kmcheck",
        description="Exact Dedekind-Rademacher sums and the -16C = F + sigma identity for Brieskorn spheres.",
        epilog=CSV_HELP,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("info", parents=[common()], help="full report for one tuple", epilog=CSV_HELP,
                       formatter_class=argparse.RawDescriptionHelpFormatter)
    p.add_argument("tuple", type=int, nargs="+")
    p.set_defaults(func=cmd_info)

    p = sub.add_parser("verify", parents=[common()], help="check every tuple up to a product bound",
                       epilog=CSV_HELP, formatter_class=argparse.RawDescriptionHelpFormatter)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--max-product", type=int, required=True)
    p.add_argument("--quiet", action="store_true", help="no progress on stderr")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("sums", parents=[common("text")], help="evaluate s(h,k;x,y)")
    p.add_argument("h", type=int)
    p.add_argument("k", type=int)
    p.add_argument("--x", default="0")
    p.add_argument("--y", default="0")
    p.add_argument("--fast", action="store_true", help="use the reciprocity descent")
    p.add_argument("--no-check", action="store_true", help="skip the direct-summation cross-check")
    p.set_defaults(func=cmd_sums)

    p = sub.add_parser("lattice", parents=[common()], help="lattice census for one tuple", epilog=CSV_HELP,
                       formatter_class=argparse.RawDescriptionHelpFormatter)
    p.add_argument("tuple", type=int, nargs="+")
    p.set_defaults(func=cmd_lattice)

    p = sub.add_parser("bench", parents=[common("csv")], help="time direct vs fast sums", epilog=CSV_HELP,
                       formatter_class=argparse.RawDescriptionHelpFormatter)
    p.add_argument("--max-k", type=int, default=4096)
    p.add_argument("--trials", type=int, default=3)
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    if getattr(args, "workers", 1) < 1:
        print("kmcheck: --workers must be >= 1", file=sys.stderr)
        return EXIT_USAGE
    try:
        return args.func(args)
    except (KMError, UsageError) as exc:
        print(f"kmcheck: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except InternalInconsistency as exc:
        print(f"kmcheck: verification failure: {exc}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
