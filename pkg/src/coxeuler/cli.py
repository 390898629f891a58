"""``coxeter-eulerian`` command line.

Exit codes: 0 success, 1 a verification failed, 2 usage error, 3 a requested
rank exceeds a resource bound.
"""

from __future__ import annotations

import argparse
import logging
import sys
from typing import Sequence, TextIO

from . import recurrences as rec
from .algebra import bisection_real_root_count, sturm_real_root_count
from .cache import TableRecord, default_cache_path, dumps, load_cache, save_cache
from .signed import ENUMERATION_LIMIT
from .suites import MIN_RANK, ORACLE_SUITES, SUITES, Bounds, run_suite
from .tables import DEFAULT_ORACLE_BOUND, STATS, brute_force_eulerian, brute_force_sub_row

log = logging.getLogger("coxeuler")

EXIT_OK, EXIT_FAILED, EXIT_USAGE, EXIT_BOUND = 0, 1, 2, 3


class UsageError(Exception):
    pass


class BoundError(Exception):
    pass


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="coxeter-eulerian",
        description="Eulerian and sub-Eulerian polynomials of types A, B, D.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--family", choices=("A", "B", "D"), default="D")
    common.add_argument("--stat", choices=("eulerian",) + STATS, default="eulerian")
    ranks = common.add_mutually_exclusive_group()
    ranks.add_argument("--n", type=int, help="a single rank")
    ranks.add_argument("--max-n", type=int, help="all ranks up to this one")
    common.add_argument("--source", choices=("auto", "oracle", "recurrence"), default="auto")
    common.add_argument("--order", type=int, help="series truncation order (egf/pde suites)")
    common.add_argument("--format", choices=("json", "csv"), default="json")
    common.add_argument("--cache", help="JSON-lines table cache (default: $COXEULER_CACHE)")
    common.add_argument("--oracle-bound", type=int, default=DEFAULT_ORACLE_BOUND,
                        help=f"largest rank computed by enumeration (max {ENUMERATION_LIMIT})")
    common.add_argument("--recurrence-bound", type=int, default=40)
    common.add_argument("--t-degree", type=int, default=24)

    sub.add_parser("table", parents=[common], help="emit polynomial rows")
    v = sub.add_parser("verify", parents=[common], help="run a verification suite")
    v.add_argument("--suite", choices=tuple(SUITES) + ("all",), default="all")
    sub.add_parser("roots", parents=[common], help="empirical real-rootedness probe")
    return parser


def _check_bounds(args) -> None:
    if args.oracle_bound < 2:
        raise UsageError("--oracle-bound must be at least 2")
    if args.oracle_bound > ENUMERATION_LIMIT:
        raise BoundError(f"--oracle-bound {args.oracle_bound} exceeds enumeration limit {ENUMERATION_LIMIT}")
    if args.recurrence_bound < 2:
        raise UsageError("--recurrence-bound must be at least 2")


def _ranks(args, lo: int, default_max: int | None = None) -> list[int]:
    if args.n is not None:
        if args.n < lo:
            raise UsageError(f"--n must be at least {lo}")
        return [args.n]
    top = args.max_n if args.max_n is not None else default_max
    if top is None:
        raise UsageError("one of --n or --max-n is required")
    if top < lo:
        raise UsageError(f"--max-n must be at least {lo}")
    return list(range(lo, top + 1))


class _Rows:
    """Computes table rows, consulting and filling the cache."""

    def __init__(self, args):
        self.args = args
        path = args.cache or default_cache_path()
        self.path = path
        self.cache = {}
        if path:
            self.cache, _ = load_cache(path)
        self.dirty = False

    def source_for(self, n: int) -> str:
        a = self.args
        if n > a.recurrence_bound:
            raise BoundError(f"rank {n} exceeds recurrence bound {a.recurrence_bound}")
        if a.source == "oracle":
            if n > a.oracle_bound:
                raise BoundError(f"rank {n} exceeds oracle bound {a.oracle_bound}")
            return "oracle"
        if a.source == "recurrence":
            return "recurrence"
        return "oracle" if n <= a.oracle_bound else "recurrence"

    def get(self, family: str, stat: str, ranks: list[int]) -> list[TableRecord]:
        plan = [(n, self.source_for(n)) for n in ranks]
        out = []
        ladder = sub_rows = None
        for n, source in plan:
            key = (family, stat, n, source)
            if key in self.cache:
                out.append(self.cache[key])
                continue
            if source == "oracle":
                if stat == "eulerian":
                    p = brute_force_eulerian(n, family)
                else:
                    p = brute_force_sub_row(n).get(stat)
            elif stat == "eulerian":
                if ladder is None:
                    ladder = rec.build_ladder(family, max(ranks))
                p = ladder[n]
            else:
                if sub_rows is None:
                    sub_rows = {r.n: r for r in rec.sub_rows(max(ranks))}
                p = sub_rows[n].get(stat)
            record = TableRecord.from_polynomial(family, stat, n, p)
            self.cache[key] = record
            self.dirty = True
            out.append(record)
        return out

    def flush(self):
        if self.path and self.dirty:
            save_cache(self.path, self.cache)


def cmd_table(args, out: TextIO) -> int:
    if args.stat != "eulerian" and args.family != "D":
        raise UsageError(f"statistic {args.stat} exists only for family D")
    lo = 0 if args.stat == "eulerian" else 2
    ranks = _ranks(args, lo)
    rows = _Rows(args)
    records = rows.get(args.family, args.stat, ranks)
    if args.format == "json":
        for r in records:
            out.write(dumps(r.to_dict()) + "\n")
    else:
        out.write("family,stat,n,k,coefficient\n")
        for r in records:
            for k, c in enumerate(r.coefficients):
                out.write(f"{r.family},{r.statistic},{r.n},{k},{c}\n")
    rows.flush()
    return EXIT_OK


def cmd_verify(args, out: TextIO) -> int:
    if args.format != "json":
        raise UsageError("verify emits JSON lines only")
    suites = list(SUITES) if args.suite == "all" else [args.suite]
    if args.max_n is not None or args.n is not None:
        top = args.max_n if args.max_n is not None else args.n
        need = max(MIN_RANK[s] for s in suites)
        if top < need:
            raise UsageError(f"suite {args.suite} needs --max-n >= {need}")
        if top > args.oracle_bound and any(s in ORACLE_SUITES for s in suites):
            raise BoundError(f"rank {top} exceeds oracle bound {args.oracle_bound}")
        if top > args.recurrence_bound:
            raise BoundError(f"rank {top} exceeds recurrence bound {args.recurrence_bound}")
    else:
        top = None
    order = args.order
    if order is not None and order < 4:
        raise UsageError("--order must be at least 4")
    bounds = Bounds(
        oracle=args.oracle_bound,
        recurrence=args.recurrence_bound,
        egf_order=order or 16,
        pde_order=order or 12,
        t_degree=args.t_degree,
        max_n=top,
    )
    failed = False
    for suite, report in run_suite(args.suite, bounds):
        line = {"suite": suite, **report.to_dict()}
        out.write(dumps(line) + "\n")
        out.flush()
        failed |= not report.passed
    return EXIT_FAILED if failed else EXIT_OK


def cmd_roots(args, out: TextIO) -> int:
    ranks = _ranks(args, 1, default_max=12)
    rows = _Rows(args)
    records = rows.get(args.family, "eulerian", ranks)
    disagree = False
    lines = []
    for r in records:
        p = r.polynomial()
        sturm = sturm_real_root_count(p)
        bisect = bisection_real_root_count(p)
        disagree |= bisect != sturm.distinct_real_roots
        lines.append({
            "label": "empirical",
            "family": r.family,
            "n": r.n,
            "degree": p.degree,
            "distinct_real_roots": sturm.distinct_real_roots,
            "squarefree_degree": sturm.degree_of_squarefree_part,
            "all_real": sturm.all_real,
            "bisection_count": bisect,
        })
    if args.format == "json":
        for d in lines:
            out.write(dumps(d) + "\n")
    else:
        keys = ["label", "family", "n", "degree", "distinct_real_roots",
                "squarefree_degree", "all_real", "bisection_count"]
        out.write(",".join(keys) + "\n")
        for d in lines:
            out.write(",".join(str(d[k]).lower() if isinstance(d[k], bool) else str(d[k]) for k in keys) + "\n")
    rows.flush()
    return EXIT_FAILED if disagree else EXIT_OK


COMMANDS = {"table": cmd_table, "verify": cmd_verify, "roots": cmd_roots}


def main(argv: Sequence[str] | None = None, out: TextIO | None = None) -> int:
    logging.basicConfig(level=logging.WARNING, format="%(levelname)s: %(message)s")
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        _check_bounds(args)
        return COMMANDS[args.command](args, out)
    except UsageError as exc:
        print(f"coxeter-eulerian: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except BoundError as exc:
        print(f"coxeter-eulerian: bound exceeded: {exc}", file=sys.stderr)
        return EXIT_BOUND


if __name__ == "__main__":
    sys.exit(main())
