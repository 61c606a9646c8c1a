#!/usr/bin/env python3
"""Compare the counting routes: exhaustive oracle, literal nested sums,
general recurrence, and the incremental-convolution table.

    python3 scripts/bench_counting.py --n-literal 30 --n-fast 300
"""

import argparse
import time

from hrd.counting import count_hrd, count_hrd_fast, count_hrd_literal, oracle_count


def timed(label: str, fn):
    start = time.perf_counter()
    value = fn()
    elapsed = time.perf_counter() - start
    print(f"{label:<34} {elapsed:8.3f}s   -> {value}")
    return value


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n-oracle", type=int, default=8)
    ap.add_argument("--n-literal", type=int, default=30)
    ap.add_argument("--n-fast", type=int, default=300)
    args = ap.parse_args()

    a = timed(f"oracle_count(5, {args.n_oracle})", lambda: oracle_count(5, args.n_oracle))
    b = timed(f"count_hrd_literal({args.n_oracle})", lambda: count_hrd_literal(args.n_oracle))
    assert a == b, "oracle and literal disagree"

    lit = timed(f"count_hrd_literal({args.n_literal})", lambda: count_hrd_literal(args.n_literal))
    gen = timed(f"count_hrd(5, {args.n_literal})", lambda: count_hrd(5, args.n_literal))
    assert lit == gen, "literal and general disagree"

    table = None

    def build():
        nonlocal table
        table = count_hrd_fast(5, args.n_fast)
        return f"t_{args.n_fast} has {len(str(table.t[args.n_fast]))} digits"

    timed(f"count_hrd_fast(5, {args.n_fast})", build)
    assert table.t[args.n_literal] == lit, "fast and literal disagree"
    print("all routes agree")


if __name__ == "__main__":
    main()
