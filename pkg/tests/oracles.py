"""Independent reference implementations used only by the tests.

These deliberately share no code with the production predicates they check.
"""

from itertools import combinations


def baxter_quadruple_scan(values) -> bool:
    """Literal O(n^4) scan: no indices i<j<k<l may satisfy
    p[k] < p[i]+1 = p[l] < p[j]  or  p[j] < p[i] = p[l]+1 < p[k]."""
    n = len(values)
    for i in range(n):
        for j in range(i + 1, n):
            for k in range(j + 1, n):
                for l in range(k + 1, n):
                    pi, pj, pk, pl = values[i], values[j], values[k], values[l]
                    if pk < pi + 1 == pl < pj:
                        return False
                    if pj < pi == pl + 1 < pk:
                        return False
    return True


def _pattern_of(seq) -> tuple:
    ranks = sorted(seq)
    return tuple(ranks.index(v) + 1 for v in seq)


def contains_pattern_bruteforce(text, pattern) -> bool:
    """Check every index subset of the text."""
    k = len(pattern)
    target = _pattern_of(pattern)
    for idxs in combinations(range(len(text)), k):
        if _pattern_of([text[i] for i in idxs]) == target:
            return True
    return False


def blocks_bruteforce(values) -> set:
    """(start, end) pairs whose value set is a consecutive integer range."""
    n = len(values)
    out = set()
    for i in range(n):
        for j in range(i, n):
            seg = sorted(values[i : j + 1])
            if seg == list(range(seg[0], seg[0] + len(seg))):
                out.add((i + 1, j + 1))
    return out


def inflate_bruteforce(skeleton, children):
    """Wreath product straight from the definition: lay out value intervals
    by skeleton rank, then concatenate the patterned blocks."""
    sizes = [len(c) for c in children]
    starts = {}
    base = 1
    for v in sorted(skeleton):
        slot = skeleton.index(v)
        starts[slot] = base
        base += sizes[slot]
    out = []
    for slot, child in enumerate(children):
        lo = starts[slot]
        ordered = sorted(range(lo, lo + len(child)))
        out.extend(ordered[cv - 1] for cv in child)
    return tuple(out)
