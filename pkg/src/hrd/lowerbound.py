"""Insertion families and irreducible growth: the machinery behind the
3**(n-k) lower bound on order-k dissections with n rooms.

Starting from an irreducible seed of length k, each step inserts the new
maximum at one of the safe sites of the current permutation: before the
first element, after the last element, or immediately next to the current
maximum on either side.  Insertion there can neither create a forbidden
quadruple nor raise the hierarchy order, so every member of the family
stays Baxter and order k while remaining outside order k-1.  Using exactly
three canonical sites per step makes the family size exactly 3**(n-k).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .floorplan import MosaicFloorplan, bp2fp, fp2bp
from .gentree import is_hrd, is_ihrd
from .perm import Permutation, _is_baxter_seq, _is_simple_seq, is_baxter, is_simple, simple_baxter_perms


def safe_sites(p: Permutation) -> list[int]:
    """Insertion slots (number of elements to the left) that keep the
    permutation Baxter and order-preserving when the new maximum goes there.

    The four candidates are before the first element, after the last one,
    and either side of the current maximum; coincident candidates collapse,
    leaving 3 or 4 distinct slots for length >= 2 (2 for the singleton,
    which sits outside the theorem's setting).
    """
    n = len(p)
    m = p.position_of(n)
    return sorted({0, m - 1, m, n})


def insert_max(p: Permutation, site: int) -> Permutation:
    """Insert value n+1 at a safe slot."""
    if site not in safe_sites(p):
        raise ValueError(f"slot {site} is not a safe insertion site of {p}")
    vals = p.values
    return Permutation(vals[:site] + (len(p) + 1,) + vals[site:])


def _canonical_sites(p: Permutation) -> list[int]:
    """Exactly three sites per step: drop "after last" when all four are
    distinct, so the branching is uniform and the family size exact."""
    sites = safe_sites(p)
    if len(sites) == 4:
        sites.remove(len(p))
    if len(p) >= 2 and len(sites) != 3:
        raise AssertionError(f"expected 3 distinct sites on {p}, got {sites}")
    return sites


@dataclass(frozen=True)
class InsertionTrace:
    """One branch of the family: the seed, the chosen slots, the result."""

    seed: Permutation
    choices: tuple[int, ...]
    current: Permutation


def insertion_traces(
    k: int,
    n: int,
    seed: Permutation,
    *,
    all_sites: bool = False,
) -> Iterator[InsertionTrace]:
    """All insertion traces from an irreducible seed of length k up to
    length n, in lexicographic order of the choice vectors."""
    if len(seed) != k:
        raise ValueError(f"seed {seed} does not have length {k}")
    if not is_ihrd(seed):
        raise ValueError(f"seed {seed} is not simple Baxter")
    if n < k:
        raise ValueError(f"target length {n} is below the seed length {k}")

    def walk(cur: Permutation, choices: tuple[int, ...]) -> Iterator[InsertionTrace]:
        if len(cur) == n:
            yield InsertionTrace(seed, choices, cur)
            return
        sites = safe_sites(cur) if all_sites else _canonical_sites(cur)
        for site in sites:
            yield from walk(insert_max(cur, site), choices + (site,))

    yield from walk(seed, ())


@dataclass(frozen=True)
class FamilyReport:
    seed: Permutation
    k: int
    n: int
    count: int
    expected: int
    all_baxter: bool
    all_hrd_k: bool
    none_hrd_below: bool
    samples: tuple[Permutation, ...]


def insertion_family(
    k: int,
    n: int,
    seed: Permutation,
    *,
    all_sites: bool = False,
    sample_count: int = 3,
) -> FamilyReport:
    """Enumerate the family and verify every member by the predicates."""
    finals: list[Permutation] = []
    seen: set[tuple[int, ...]] = set()
    all_baxter = all_hrd_k = none_below = True
    for trace in insertion_traces(k, n, seed, all_sites=all_sites):
        q = trace.current
        if q.values not in seen:
            seen.add(q.values)
            finals.append(q)
        if not is_baxter(q):
            all_baxter = False
        if not is_hrd(q, k):
            all_hrd_k = False
        if k > 2 and is_hrd(q, k - 1):
            none_below = False
    return FamilyReport(
        seed=seed,
        k=k,
        n=n,
        count=len(finals),
        expected=3 ** (n - k),
        all_baxter=all_baxter,
        all_hrd_k=all_hrd_k,
        none_hrd_below=none_below,
        samples=tuple(finals[:sample_count]),
    )


def format_report(r: FamilyReport) -> str:
    seed = r.seed.compact() if len(r.seed) <= 9 else ",".join(str(v) for v in r.seed)
    return (
        f"seed={seed} k={r.k} n={r.n} family={r.count} expected={r.expected} "
        f"all_baxter={r.all_baxter} all_hrd_k={r.all_hrd_k} none_hrd_k-1={r.none_hrd_below}"
    )


def _one_point_extensions(vals: tuple[int, ...]) -> set[tuple[int, ...]]:
    n = len(vals)
    out: set[tuple[int, ...]] = set()
    for v in range(1, n + 2):
        bumped = tuple(x + 1 if x >= v else x for x in vals)
        for pos in range(n + 1):
            out.add(bumped[:pos] + (v,) + bumped[pos:])
    return out


def _grow_label(label: Permutation) -> Permutation:
    """A simple Baxter permutation two longer that contains ``label``.

    Deterministic search over all two-element extensions, lexicographically;
    falls back to the census list of the target length if (contrary to all
    observed cases) no extension qualifies.
    """
    for q1 in sorted(_one_point_extensions(label.values)):
        for q2 in sorted(_one_point_extensions(q1)):
            if _is_baxter_seq(q2) and _is_simple_seq(q2):
                return Permutation(q2)
    fallback = simple_baxter_perms(len(label) + 2)
    if fallback:
        return fallback[0]
    raise RuntimeError(f"no irreducible growth target of length {len(label) + 2} exists")


def grow_ihrd(f: MosaicFloorplan) -> MosaicFloorplan:
    """Grow an irreducible dissection of order k >= 7 into one of order k+2.

    The result is rebuilt from a verified simple Baxter label permutation,
    so the postcondition (k+2 rooms, label simple and Baxter) holds by
    construction; the input's label survives as a pattern of the output's.
    """
    label = fp2bp(f)
    if not (is_simple(label) and is_baxter(label)):
        raise ValueError("floorplan is not irreducible: its label permutation is not simple Baxter")
    if len(label) < 7:
        raise ValueError("the growth construction applies from order 7 upward")
    grown = _grow_label(label)
    if not (len(grown) == len(label) + 2 and is_ihrd(grown)):
        raise AssertionError(f"growth produced an invalid target {grown}")
    return bp2fp(grown)
