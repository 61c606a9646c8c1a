"""Permutation algebra: pattern containment, Baxter and simple predicates,
blocks, inflation, and the canonical substitution decomposition.

Positions and values are one-indexed throughout.  A permutation of length n
is a bijection on {1..n} kept in one-line notation, so ``41352`` sends
position 1 to value 4.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, NamedTuple


@dataclass(frozen=True)
class Permutation:
    """Immutable one-line permutation of {1..n}."""

    values: tuple[int, ...]

    def __post_init__(self) -> None:
        n = len(self.values)
        if n == 0:
            raise ValueError("a permutation needs length >= 1")
        seen = [False] * (n + 1)
        for v in self.values:
            if not isinstance(v, int) or isinstance(v, bool) or not 1 <= v <= n or seen[v]:
                raise ValueError(f"not a bijection onto 1..{n}: {self.values!r}")
            seen[v] = True

    @classmethod
    def of(cls, *values: int) -> Permutation:
        return cls(tuple(values))

    @classmethod
    def parse(cls, text: str) -> Permutation:
        """Parse whitespace-separated values, or a compact digit string.

        The compact form (``41352``) is accepted only for n <= 9, where it is
        unambiguous.
        """
        tokens = text.split()
        if not tokens:
            raise ValueError("empty permutation text")
        if len(tokens) == 1 and len(tokens[0]) > 1 and tokens[0].isdigit():
            if len(tokens[0]) > 9:
                raise ValueError("compact digit form is limited to n <= 9")
            return cls(tuple(int(ch) for ch in tokens[0]))
        try:
            values = tuple(int(tok) for tok in tokens)
        except ValueError:
            raise ValueError(f"malformed permutation text: {text!r}") from None
        return cls(values)

    def at(self, pos: int) -> int:
        """Value at a one-indexed position."""
        if not 1 <= pos <= len(self.values):
            raise IndexError(f"position {pos} out of range 1..{len(self.values)}")
        return self.values[pos - 1]

    def position_of(self, value: int) -> int:
        """One-indexed position holding ``value``."""
        if not 1 <= value <= len(self.values):
            raise ValueError(f"value {value} out of range 1..{len(self.values)}")
        return self.values.index(value) + 1

    def compact(self) -> str:
        """Digit-string form, defined for n <= 9 only."""
        if len(self.values) > 9:
            raise ValueError("compact form is limited to n <= 9")
        return "".join(str(v) for v in self.values)

    def __len__(self) -> int:
        return len(self.values)

    def __iter__(self) -> Iterator[int]:
        return iter(self.values)

    def __str__(self) -> str:
        return " ".join(str(v) for v in self.values)

    def __repr__(self) -> str:
        return f"Permutation({' '.join(str(v) for v in self.values)})"


class Block(NamedTuple):
    """Positions start..end (inclusive, one-indexed) whose values form a
    consecutive integer range."""

    start: int
    end: int


@dataclass(frozen=True)
class Decomposition:
    """Canonical substitution decomposition p = skeleton[child_1, ..., child_m].

    The skeleton is simple and non-singleton.  When the skeleton is 12
    (resp. 21) the first child is the minimal one, i.e. it cannot itself be
    written as 12[b, c] (resp. 21[b, c]).
    """

    skeleton: Permutation
    children: tuple[Permutation, ...]


class Symmetries(NamedTuple):
    reverse: Permutation
    complement: Permutation
    inverse: Permutation


def contains_pattern(text: Permutation, pattern: Permutation) -> bool:
    """True iff some subsequence of ``text`` is order-isomorphic to ``pattern``."""
    if len(pattern) > len(text):
        raise ValueError("pattern longer than text")
    t, s = text.values, pattern.values

    def extend(start: int, chosen: list[int]) -> bool:
        k = len(chosen)
        if k == len(s):
            return True
        # leave enough room for the remaining pattern entries
        for i in range(start, len(t) - (len(s) - k) + 1):
            v = t[i]
            if all((v > w) == (s[k] > s[j]) for j, w in enumerate(chosen)):
                chosen.append(v)
                if extend(i + 1, chosen):
                    return True
                chosen.pop()
        return False

    return extend(0, [])


def _is_baxter_seq(vals: tuple[int, ...]) -> bool:
    n = len(vals)
    if n < 4:
        return True
    pos = [0] * (n + 1)
    for i, v in enumerate(vals):
        pos[v] = i
    for v in range(1, n):
        lo, hi = pos[v], pos[v + 1]
        if lo < hi:
            # forbidden 3142 with ends v, v+1: something > v+1 then
            # something < v strictly between them
            seen_big = False
            for i in range(lo + 1, hi):
                if vals[i] > v + 1:
                    seen_big = True
                elif vals[i] < v and seen_big:
                    return False
        else:
            # forbidden 2413 with ends v+1, v: small then big between them
            seen_small = False
            for i in range(hi + 1, lo):
                if vals[i] < v:
                    seen_small = True
                elif vals[i] > v + 1 and seen_small:
                    return False
    return True


def is_baxter(p: Permutation) -> bool:
    """Baxter test: no 3142 or 2413 occurrence whose outer pair differs by 1."""
    return _is_baxter_seq(p.values)


def blocks(p: Permutation) -> list[Block]:
    """All blocks, trivial ones included, sorted by (start, end).

    A segment of positions is a block exactly when max - min of its values
    equals its length - 1.
    """
    vals = p.values
    n = len(vals)
    out: list[Block] = []
    for i in range(n):
        mn = mx = vals[i]
        out.append(Block(i + 1, i + 1))
        for j in range(i + 1, n):
            v = vals[j]
            if v < mn:
                mn = v
            elif v > mx:
                mx = v
            if mx - mn == j - i:
                out.append(Block(i + 1, j + 1))
    return out


def _is_simple_seq(vals: tuple[int, ...]) -> bool:
    n = len(vals)
    if n <= 2:
        return True
    for i in range(n):
        mn = mx = vals[i]
        last = n - 2 if i == 0 else n - 1  # skip the full interval
        for j in range(i + 1, last + 1):
            v = vals[j]
            if v < mn:
                mn = v
            elif v > mx:
                mx = v
            if mx - mn == j - i:
                return False
    return True


def is_simple(p: Permutation) -> bool:
    """True iff every block is a singleton or the whole interval.

    By this reading 1, 12 and 21 are simple.
    """
    return _is_simple_seq(p.values)


def one_point_delete(p: Permutation, i: int) -> Permutation:
    """Remove the element at position ``i`` and rank-order the rest."""
    n = len(p)
    if n < 2:
        raise ValueError("cannot delete from a singleton")
    if not 1 <= i <= n:
        raise IndexError(f"position {i} out of range 1..{n}")
    removed = p.values[i - 1]
    rest = (v - 1 if v > removed else v for k, v in enumerate(p.values) if k != i - 1)
    return Permutation(tuple(rest))


def inflate(skeleton: Permutation, children: list[Permutation] | tuple[Permutation, ...]) -> Permutation:
    """Wreath product skeleton[child_1, ..., child_m].

    Child i occupies consecutive positions at slot i; its values land in the
    value range determined by the rank of skeleton value i.
    """
    m = len(skeleton)
    if len(children) != m:
        raise ValueError(f"skeleton of length {m} needs {m} children, got {len(children)}")
    sizes = [len(c) for c in children]
    val_off = [0] * m
    total = 0
    for v in range(1, m + 1):
        slot = skeleton.values.index(v)
        val_off[slot] = total
        total += sizes[slot]
    out: list[int] = []
    for slot, child in enumerate(children):
        off = val_off[slot]
        out.extend(off + cv for cv in child.values)
    return Permutation(tuple(out))


def _rank_seq(seq: tuple[int, ...]) -> tuple[int, ...]:
    order = sorted(range(len(seq)), key=seq.__getitem__)
    ranks = [0] * len(seq)
    for r, idx in enumerate(order, 1):
        ranks[idx] = r
    return tuple(ranks)


def decompose(p: Permutation) -> Decomposition:
    """The unique canonical decomposition with a simple non-singleton skeleton.

    Direct sums give skeleton 12 with a minimal (sum-indecomposable) first
    child, skew sums give 21 likewise; otherwise the maximal proper blocks
    partition the positions and their pattern is the skeleton.
    """
    n = len(p)
    if n < 2:
        raise ValueError("cannot decompose a singleton")
    vals = p.values

    mx = 0
    for j in range(1, n):
        if vals[j - 1] > mx:
            mx = vals[j - 1]
        if mx == j:
            return Decomposition(
                Permutation.of(1, 2),
                (Permutation(_rank_seq(vals[:j])), Permutation(_rank_seq(vals[j:]))),
            )

    mn = n + 1
    for j in range(1, n):
        if vals[j - 1] < mn:
            mn = vals[j - 1]
        if mn == n - j + 1:
            return Decomposition(
                Permutation.of(2, 1),
                (Permutation(_rank_seq(vals[:j])), Permutation(_rank_seq(vals[j:]))),
            )

    bounds: list[tuple[int, int]] = []
    i = 0
    while i < n:
        best = i
        mn = mx = vals[i]
        for j in range(i + 1, n):
            v = vals[j]
            if v < mn:
                mn = v
            elif v > mx:
                mx = v
            if mx - mn == j - i and not (i == 0 and j == n - 1):
                best = j
        bounds.append((i, best))
        i = best + 1
    mins = tuple(min(vals[a : b + 1]) for a, b in bounds)
    skeleton = Permutation(_rank_seq(mins))
    children = tuple(Permutation(_rank_seq(vals[a : b + 1])) for a, b in bounds)
    return Decomposition(skeleton, children)


def symmetries(p: Permutation) -> Symmetries:
    """Reverse, complement and inverse images."""
    n = len(p)
    rev = tuple(reversed(p.values))
    comp = tuple(n + 1 - v for v in p.values)
    inv = [0] * n
    for i, v in enumerate(p.values):
        inv[v - 1] = i + 1
    return Symmetries(Permutation(rev), Permutation(comp), Permutation(tuple(inv)))


@lru_cache(maxsize=None)
def simple_baxter_perms(length: int) -> tuple[Permutation, ...]:
    """All simple Baxter permutations of a given length, lexicographically.

    Exhaustive scan of the symmetric group; meant for desk-scale lengths.
    """
    if length < 1:
        raise ValueError("length must be >= 1")
    out = []
    for tup in itertools.permutations(range(1, length + 1)):
        if _is_baxter_seq(tup) and _is_simple_seq(tup):
            out.append(Permutation(tup))
    return tuple(out)
