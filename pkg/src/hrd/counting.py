"""Exact counting of order-k hierarchical dissections.

Let t_m be the number of skewed generating trees of order k with m leaves
(equivalently, dissections with m rooms).  Splitting on the root label:

    t_m = a_m + b_m + sum over skeleton lengths l of s_l * C_l[m]

where a_m / b_m count the trees rooted 12 / 21, s_l is the number of simple
Baxter permutations of length l (4 <= l <= k), and C_l[m] sums the products
t_{n_1} * ... * t_{n_l} over ordered compositions of m into l positive
parts.  The skew rule makes the restricted child of a 12-root anything but a
12-root, so

    a_m = t_{m-1} + sum_{i=2}^{m-1} t_{m-i} * (t_i - a_i)

and b_m satisfies the mirror recurrence, giving a_m = b_m throughout (the
builder asserts it).  Everything here is exact integer arithmetic.

Three independent evaluation routes are kept deliberately: the order-5
recurrence spelled out with literal nested composition loops
(``count_hrd_literal``), the general recurrence with direct composition
sums (``count_hrd``), and an O(k n^2) incremental-convolution table
(``count_hrd_fast``).  ``oracle_count`` checks them all against exhaustive
enumeration at small n.
"""

from __future__ import annotations

import itertools
import os
from dataclasses import dataclass
from functools import lru_cache
from pathlib import Path

from .gentree import hierarchy_order
from .perm import Permutation, _is_baxter_seq, simple_baxter_perms

DEFAULT_CENSUS_CAP = 10
DEFAULT_ORACLE_CAP = 9

_MEMO_ENV = "HRD_MEMO_DIR"
_TABLE_VERSION = "hrd-count-table v1"


class CapExceeded(RuntimeError):
    """An exhaustive scan was requested beyond its configured cap."""


@dataclass(frozen=True)
class Census:
    """Simple Baxter permutations of one length: the order-l skeletons."""

    length: int
    count: int
    perms: tuple[Permutation, ...] | None = None


def census_simple_baxter(
    length: int,
    with_list: bool = False,
    *,
    cap: int = DEFAULT_CENSUS_CAP,
    force: bool = False,
) -> Census:
    """Exact s_l by exhaustive filtering of the symmetric group."""
    if length < 2:
        raise ValueError("census is defined for lengths >= 2")
    if length > cap and not force:
        raise CapExceeded(f"census length {length} exceeds the cap {cap}; pass force to override")
    perms = simple_baxter_perms(length)
    return Census(length, len(perms), perms if with_list else None)


def _skeleton_counts(k: int, *, cap: int, force: bool) -> dict[int, int]:
    """s_l for 4 <= l <= k, zero entries dropped."""
    out: dict[int, int] = {}
    for length in range(4, k + 1):
        s = census_simple_baxter(length, cap=cap, force=force).count
        if s:
            out[length] = s
    return out


def count_hrd_literal(n: int) -> int:
    """The order-5 count t_n, evaluated exactly as the recurrence is written:

        t_n = t_{n-1} + sum t_i t_{n-i}
              + 2 * sum over 6-part compositions of n of the t-products
              + 2 * sum over 5-part compositions of n of the t-products

    using direct nested summation over the compositions.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    t = [0] * (n + 1)
    t[1] = 1
    for m in range(2, n + 1):
        x = 0
        for i in range(1, m):
            x += t[i] * t[m - i]
        y = 0  # five-part compositions
        for i in range(1, m - 3):
            for j in range(1, m - i - 2):
                for kk in range(1, m - i - j - 1):
                    for l in range(1, m - i - j - kk):
                        y += t[i] * t[j] * t[kk] * t[l] * t[m - i - j - kk - l]
        z = 0  # six-part compositions
        for h in range(1, m - 4):
            for i in range(1, m - h - 3):
                for j in range(1, m - h - i - 2):
                    for kk in range(1, m - h - i - j - 1):
                        for l in range(1, m - h - i - j - kk):
                            z += t[h] * t[i] * t[j] * t[kk] * t[l] * t[m - h - i - j - kk - l]
        t[m] = t[m - 1] + x + 2 * z + 2 * y
    return t[n]


def _composition_sum(t: list[int], m: int, parts: int) -> int:
    """Sum of t-products over ordered compositions of m into ``parts``
    positive parts, by direct recursion (no memoization)."""
    if parts == 1:
        return t[m] if 1 <= m < len(t) else 0
    total = 0
    for first in range(1, m - parts + 2):
        total += t[first] * _composition_sum(t, m - first, parts - 1)
    return total


def count_hrd(k: int, n: int, *, census_cap: int = DEFAULT_CENSUS_CAP, force: bool = False) -> int:
    """t_n for any order k, by the generalized recurrence with direct
    composition sums."""
    if k < 2:
        raise ValueError("order k must be >= 2")
    if n < 1:
        raise ValueError("n must be >= 1")
    s = _skeleton_counts(k, cap=census_cap, force=force)
    t = [0] * (n + 1)
    a = [0] * (n + 1)
    t[1] = 1
    for m in range(2, n + 1):
        am = t[m - 1]
        for i in range(2, m):
            am += t[m - i] * (t[i] - a[i])
        a[m] = am
        skel = 0
        for length, mult in s.items():
            skel += mult * _composition_sum(t, m, length)
        t[m] = 2 * am + skel
    return t[n]


@dataclass
class CountTable:
    """Arbitrary-precision count arrays for one order k.

    Index m runs 1..n_max; slot 0 is unused.  ``comp[l]`` holds the
    composition sums C_l[m].
    """

    k: int
    t: list[int]
    a: list[int]
    b: list[int]
    comp: dict[int, list[int]]

    @property
    def n_max(self) -> int:
        return len(self.t) - 1

    def counts(self) -> list[int]:
        return self.t[1:]


def count_hrd_fast(
    k: int,
    n_max: int,
    *,
    base: CountTable | None = None,
    census_cap: int = DEFAULT_CENSUS_CAP,
    force: bool = False,
) -> CountTable:
    """The same t values as ``count_hrd`` in O(k * n_max^2) arithmetic ops.

    C_l is grown incrementally as the convolution of C_{l-1} with t; every
    term it needs is available because an l-part composition of m only uses
    t-values at indices <= m - l + 1.  Passing ``base`` extends an existing
    table for the same k.
    """
    if k < 2:
        raise ValueError("order k must be >= 2")
    if n_max < 1:
        raise ValueError("n_max must be >= 1")
    s = _skeleton_counts(k, cap=census_cap, force=force)
    lengths = sorted(s)
    max_l = lengths[-1] if lengths else 0

    t = [0, 1]
    a = [0, 0]
    b = [0, 0]
    comp: dict[int, list[int]] = {l: [0, 0] for l in range(2, max_l + 1)}
    start = 2
    if base is not None:
        if base.k != k:
            raise ValueError(f"cannot extend an order-{base.k} table to order {k}")
        t = list(base.t)
        a = list(base.a)
        b = list(base.b)
        comp = {l: list(base.comp.get(l, [])) for l in range(2, max_l + 1)}
        for l in range(2, max_l + 1):
            if len(comp[l]) != len(t):
                # rebuild convolutions missing from a loaded table
                comp[l] = [0] * len(t)
                for m in range(2, len(t)):
                    prev = t if l == 2 else comp[l - 1]
                    comp[l][m] = sum(prev[m - i] * t[i] for i in range(1, m))
        start = len(t)

    for m in range(start, n_max + 1):
        for l in range(2, max_l + 1):
            prev = t if l == 2 else comp[l - 1]
            comp[l].append(sum(prev[m - i] * t[i] for i in range(1, m)))
        am = t[m - 1] + sum(t[m - i] * (t[i] - a[i]) for i in range(2, m))
        bm = t[m - 1] + sum(t[m - i] * (t[i] - b[i]) for i in range(2, m))
        if am != bm:
            raise AssertionError(f"12/21 symmetry broke at m={m}: {am} != {bm}")
        a.append(am)
        b.append(bm)
        skel = sum(s[l] * comp[l][m] for l in lengths)
        t.append(am + bm + skel)

    if len(t) > n_max + 1:
        t = t[: n_max + 1]
        a = a[: n_max + 1]
        b = b[: n_max + 1]
        comp = {l: arr[: n_max + 1] for l, arr in comp.items()}
    return CountTable(k, t, a, b, comp)


def sequence(k: int, n_max: int, **kwargs) -> list[int]:
    """[t_1, ..., t_{n_max}] for order k."""
    return count_hrd_fast(k, n_max, **kwargs).counts()


@lru_cache(maxsize=None)
def _order_histogram(n: int) -> tuple[tuple[int, int], ...]:
    """(hierarchy order, count) pairs over all Baxter permutations of S_n."""
    hist: dict[int, int] = {}
    for tup in itertools.permutations(range(1, n + 1)):
        if not _is_baxter_seq(tup):
            continue
        o = hierarchy_order(Permutation(tup))
        hist[o] = hist.get(o, 0) + 1
    return tuple(sorted(hist.items()))


def oracle_count(k: int, n: int, *, cap: int = DEFAULT_ORACLE_CAP, force: bool = False) -> int:
    """|{p in S_n : is_hrd(p, k)}| by exhaustive scan.

    Uses only the permutation and tree predicates; shares nothing with the
    recurrence evaluations above.
    """
    if k < 2:
        raise ValueError("order k must be >= 2")
    if n < 1:
        raise ValueError("n must be >= 1")
    if n > cap and not force:
        raise CapExceeded(f"oracle scan of S_{n} exceeds the cap {cap}; pass force to override")
    return sum(count for order, count in _order_histogram(n) if order <= k)


def memo_dir() -> Path:
    env = os.environ.get(_MEMO_ENV)
    if env:
        return Path(env)
    return Path.home() / ".cache" / "hrd"


def _table_path(k: int, directory: Path | None = None) -> Path:
    return (directory or memo_dir()) / f"count-table-k{k}.txt"


def save_table(table: CountTable, directory: Path | None = None) -> Path:
    path = _table_path(table.k, directory)
    path.parent.mkdir(parents=True, exist_ok=True)
    lines = [f"# {_TABLE_VERSION} k={table.k}"]
    for m in range(1, table.n_max + 1):
        lines.append(f"{m} {table.t[m]} {table.a[m]}")
    path.write_text("\n".join(lines) + "\n")
    return path


def load_table(k: int, directory: Path | None = None) -> CountTable | None:
    """Load a persisted table; silently discard anything inconsistent.

    The stored a-column is revalidated against the 21-rooted recurrence
    (a_m = b_m must hold); a mismatch means the file is stale or corrupt and
    the caller should recompute.
    """
    path = _table_path(k, directory)
    if not path.exists():
        return None
    try:
        lines = path.read_text().splitlines()
        if not lines or lines[0].strip() != f"# {_TABLE_VERSION} k={k}":
            return None
        t = [0]
        a = [0]
        for m, line in enumerate(lines[1:], 1):
            mm, tm, am = (int(tok) for tok in line.split())
            if mm != m:
                return None
            t.append(tm)
            a.append(am)
    except (ValueError, OSError):
        return None
    if len(t) < 2 or t[1] != 1 or a[1] != 0:
        return None
    b = [0, 0]
    for m in range(2, len(t)):
        bm = t[m - 1] + sum(t[m - i] * (t[i] - b[i]) for i in range(2, m))
        if bm != a[m]:
            return None
        b.append(bm)
    return CountTable(k, t, a, b, {})


def ensure_table(
    k: int,
    n: int,
    *,
    use_memo: bool = True,
    directory: Path | None = None,
    census_cap: int = DEFAULT_CENSUS_CAP,
    force: bool = False,
) -> CountTable:
    """Table covering 1..n for order k, going through the persistent memo."""
    base = load_table(k, directory) if use_memo else None
    if base is not None and base.n_max >= n:
        return base
    table = count_hrd_fast(k, n, base=base, census_cap=census_cap, force=force)
    if use_memo:
        save_table(table, directory)
    return table
