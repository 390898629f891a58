"""Compare the compiled kernels with the pure-Python fallback.

    python benchmarks/bench_census.py [--max-n 7] [--repeat 3]

Prints one JSON line per (kernel, n, backend) with the best wall time, and
checks that both backends return identical results.
"""

import argparse
import json
import sys
import timeit

from coxeuler import _pykernels
from coxeuler.signed import rule_arrays

try:
    from coxeuler import _kernels
except ImportError:
    _kernels = None


def cases(n):
    rules = rule_arrays()
    yield "sub_census", lambda: _kernels.sub_census(n), lambda: _pykernels.sub_census(n)
    yield "eulerian_census_B", lambda: list(_kernels.eulerian_census(n, "B")), lambda: list(
        _pykernels.eulerian_census(n, "B")
    )
    yield "hat_scan", lambda: _kernels.hat_scan(n), lambda: _pykernels.hat_scan(n)
    if n >= 3:
        yield "insertion_scan", lambda: _kernels.insertion_scan(n, *rules), lambda: _pykernels.insertion_scan(n)


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--min-n", type=int, default=4)
    ap.add_argument("--max-n", type=int, default=7)
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args(argv)
    if _kernels is None:
        print("compiled extension not built; nothing to compare", file=sys.stderr)
        return 1
    for n in range(args.min_n, args.max_n + 1):
        for name, fast, slow in cases(n):
            if fast() != slow():
                print(f"backend mismatch in {name} at n={n}", file=sys.stderr)
                return 1
            tc = min(timeit.repeat(fast, number=1, repeat=args.repeat))
            tp = min(timeit.repeat(slow, number=1, repeat=args.repeat))
            print(json.dumps({"kernel": name, "n": n, "cython_s": round(tc, 5),
                              "python_s": round(tp, 5), "speedup": round(tp / tc, 1) if tc else None}))
    return 0


if __name__ == "__main__":
    sys.exit(main())
