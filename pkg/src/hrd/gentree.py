"""Skewed generating trees of order k.

A generating tree records how a dissection was built by embedding small
irreducible dissections into rooms: internal nodes carry simple Baxter
permutations of length 2..k and have out-degree equal to their label's
length.  The skew rule removes the 12/21 symmetry: the child occupying the
first-child slot of a node labeled 12 (resp. 21) may not itself be labeled
12 (resp. 21).  With that rule the tree for a permutation is unique and is
exactly its recursive canonical decomposition.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Union

from .floorplan import MosaicFloorplan, _canonical_from_entries, bp2fp, single_room
from .perm import Permutation, decompose, inflate, is_baxter, is_simple, simple_baxter_perms

_P12 = Permutation.of(1, 2)
_P21 = Permutation.of(2, 1)


@dataclass(frozen=True)
class Leaf:
    """A basic room; carries its deletion-order label when one is known."""

    label: int | None = None


@dataclass(frozen=True)
class Node:
    label: Permutation
    children: tuple["GenTree", ...]


GenTree = Union[Leaf, Node]


def leaf_count(t: GenTree) -> int:
    if isinstance(t, Leaf):
        return 1
    return sum(leaf_count(c) for c in t.children)


def check_tree(t: GenTree, k: int | None = None) -> None:
    """Raise ValueError if ``t`` violates the generating-tree invariants."""
    if isinstance(t, Leaf):
        return
    m = len(t.label)
    if m < 2:
        raise ValueError("node labels must be non-singleton")
    if k is not None and m > k:
        raise ValueError(f"node label {t.label} exceeds order {k}")
    if not (is_simple(t.label) and is_baxter(t.label)):
        raise ValueError(f"node label {t.label} is not simple Baxter")
    if len(t.children) != m:
        raise ValueError(f"node labeled {t.label} needs {m} children, has {len(t.children)}")
    first = t.children[0]
    if t.label in (_P12, _P21) and isinstance(first, Node) and first.label == t.label:
        raise ValueError(f"skew rule: restricted child of {t.label} repeats the label")
    for c in t.children:
        check_tree(c, k)


def perm_of_tree(t: GenTree) -> Permutation:
    """Evaluate a tree by recursive inflation; a leaf is the singleton."""
    if isinstance(t, Leaf):
        return Permutation.of(1)
    return inflate(t.label, [perm_of_tree(c) for c in t.children])


def tree_of_perm(p: Permutation, k: int) -> GenTree | None:
    """The unique skewed generating tree of order k evaluating to ``p``.

    Returns None when some skeleton of the recursive canonical decomposition
    is longer than k, i.e. when p is not an order-k permutation.
    """
    if k < 2:
        raise ValueError("order k must be >= 2")
    if not is_baxter(p):
        raise ValueError("generating trees exist only for Baxter permutations")
    return _build(p, k)


def _build(p: Permutation, k: int) -> GenTree | None:
    if len(p) == 1:
        return Leaf()
    d = decompose(p)
    if len(d.skeleton) > k:
        return None
    kids = []
    for child in d.children:
        sub = _build(child, k)
        if sub is None:
            return None
        kids.append(sub)
    return Node(d.skeleton, tuple(kids))


def is_hrd(p: Permutation, k: int) -> bool:
    """True iff p labels an order-k hierarchical dissection."""
    if k < 2:
        raise ValueError("order k must be >= 2")
    if not is_baxter(p):
        return False
    return _build(p, k) is not None


def is_ihrd(p: Permutation) -> bool:
    """True iff p labels an irreducible dissection: simple, Baxter, length >= 2."""
    return len(p) >= 2 and is_baxter(p) and is_simple(p)


def hierarchy_order(p: Permutation) -> int:
    """Smallest k for which ``is_hrd(p, k)`` holds (1 for the singleton)."""
    if not is_baxter(p):
        raise ValueError("hierarchy order is defined for Baxter permutations")

    def walk(q: Permutation) -> int:
        if len(q) == 1:
            return 1
        d = decompose(q)
        return max(len(d.skeleton), max(walk(c) for c in d.children))

    return walk(p)


def floorplan_of_tree(t: GenTree) -> MosaicFloorplan:
    """Realize a tree geometrically by recursive embedding.

    The base floorplan of a node is built from its label; the child at
    position i (whose values form value block sigma[i]) is embedded into the
    base room labeled sigma[i].  Embedded walls are placed on grid lines
    that are fresh for the whole arrangement (each child draws from its own
    disjoint offset block), so no accidental collinearity can produce a '+'
    junction.  The result is rank-canonical with fresh room ids.
    """
    if isinstance(t, Leaf):
        return single_room()

    def build(sub: GenTree) -> MosaicFloorplan:
        if isinstance(sub, Leaf):
            return single_room()
        base = bp2fp(sub.label)
        kids = [build(c) for c in sub.children]
        # scale the base grid so each room can host its child's interior
        # lines on globally unused coordinates
        kx = sum(c.width - 1 for c in kids) + 1
        ky = sum(c.height - 1 for c in kids) + 1
        off_x = off_y = 0
        ids = itertools.count(1)
        entries: list[tuple] = []
        for pos, child in enumerate(kids):
            room = base.room(sub.label.values[pos])

            def map_x(cx: int, room=room, child=child, off=off_x) -> int:
                if cx == 0:
                    return room.x1 * kx
                if cx == child.width:
                    return room.x2 * kx
                return room.x1 * kx + off + cx

            def map_y(cy: int, room=room, child=child, off=off_y) -> int:
                if cy == 0:
                    return room.y1 * ky
                if cy == child.height:
                    return room.y2 * ky
                return room.y1 * ky + off + cy

            for cr in child.rooms:
                entries.append((next(ids), map_x(cr.x1), map_y(cr.y1), map_x(cr.x2), map_y(cr.y2)))
            off_x += child.width - 1
            off_y += child.height - 1
        return _canonical_from_entries(entries)

    return build(t)


def _compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    """Ordered compositions of ``total`` into ``parts`` positive parts, lex order."""
    if parts == 1:
        yield (total,)
        return
    for first in range(1, total - parts + 2):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


@lru_cache(maxsize=None)
def _trees(k: int, n: int) -> tuple[GenTree, ...]:
    if n == 1:
        return (Leaf(),)
    out: list[GenTree] = []
    for length in range(2, min(k, n) + 1):
        for label in simple_baxter_perms(length):
            restricted = label if label in (_P12, _P21) else None
            for comp in _compositions(n, length):
                for kids in itertools.product(*(_trees(k, m) for m in comp)):
                    first = kids[0]
                    if restricted is not None and isinstance(first, Node) and first.label == restricted:
                        continue
                    out.append(Node(label, kids))
    return tuple(out)


def enumerate_trees(k: int, n: int) -> Iterator[GenTree]:
    """Every skewed generating tree of order k with n leaves, exactly once.

    Deterministic order: label length, then label lexicographically, then
    leaf-count composition, then child tuples.
    """
    if k < 2:
        raise ValueError("order k must be >= 2")
    if n < 1:
        raise ValueError("leaf count must be >= 1")
    yield from _trees(k, n)


def format_tree(t: GenTree) -> str:
    """Parenthesized prefix form: leaf ``.``, node ``(<label> <child> ...)``."""
    if isinstance(t, Leaf):
        return "."
    label = t.label.compact() if len(t.label) <= 9 else str(t.label)
    return "(" + " ".join([label] + [format_tree(c) for c in t.children]) + ")"


def parse_tree(text: str) -> GenTree:
    """Parse the prefix form, enforcing arity, label and skew invariants."""
    tokens = _tokenize(text)
    tree, rest = _parse_node(tokens)
    if rest:
        raise ValueError(f"trailing content after tree: {' '.join(rest)}")
    check_tree(tree)
    return tree


def _tokenize(text: str) -> list[str]:
    out: list[str] = []
    cur = ""
    for ch in text:
        if ch in "().":
            if cur:
                out.append(cur)
                cur = ""
            out.append(ch)
        elif ch.isspace():
            if cur:
                out.append(cur)
                cur = ""
        elif ch.isdigit():
            cur += ch
        else:
            raise ValueError(f"unexpected character {ch!r} in tree text")
    if cur:
        out.append(cur)
    return out


def _parse_node(tokens: list[str]) -> tuple[GenTree, list[str]]:
    if not tokens:
        raise ValueError("unexpected end of tree text")
    head, rest = tokens[0], tokens[1:]
    if head == ".":
        return Leaf(), rest
    if head != "(":
        raise ValueError(f"expected '(' or '.', got {head!r}")
    label_toks = []
    while rest and rest[0] not in "().":
        label_toks.append(rest[0])
        rest = rest[1:]
    if not label_toks:
        raise ValueError("node is missing its label")
    label = Permutation.parse(" ".join(label_toks))
    children: list[GenTree] = []
    while True:
        if not rest:
            raise ValueError("unterminated node: missing ')'")
        if rest[0] == ")":
            rest = rest[1:]
            break
        child, rest = _parse_node(rest)
        children.append(child)
    node = Node(label, tuple(children))
    return node, rest
