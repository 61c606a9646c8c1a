import pytest
from hypothesis import given, settings, strategies as st

from hrd.perm import Permutation
from hrd.floorplan import fp2bp, validate
from hrd.gentree import (
    Leaf,
    Node,
    check_tree,
    enumerate_trees,
    floorplan_of_tree,
    format_tree,
    hierarchy_order,
    is_hrd,
    is_ihrd,
    leaf_count,
    parse_tree,
    perm_of_tree,
    tree_of_perm,
)

P = Permutation.parse

WHEEL_TREE = Node(
    P("41352"),
    (Node(P("12"), (Leaf(), Leaf())), Leaf(), Leaf(), Leaf(), Leaf()),
)


class TestPermOfTree:
    def test_leaf(self):
        assert perm_of_tree(Leaf()) == P("1")

    def test_node_of_leaves(self):
        t = Node(P("41352"), tuple(Leaf() for _ in range(5)))
        assert perm_of_tree(t) == P("41352")

    def test_nested(self):
        assert perm_of_tree(WHEEL_TREE) == P("451362")

    def test_arity_violation(self):
        with pytest.raises(ValueError):
            perm_of_tree(Node(P("12"), (Leaf(),)))


class TestTreeOfPerm:
    def test_singleton(self):
        assert tree_of_perm(P("1"), 2) == Leaf()

    def test_wheel_with_split_arm(self):
        assert tree_of_perm(P("451362"), 5) == WHEEL_TREE

    def test_order_too_small(self):
        assert tree_of_perm(P("41352"), 2) is None
        assert tree_of_perm(P("41352"), 4) is None
        assert tree_of_perm(P("41352"), 5) is not None

    def test_non_baxter_rejected(self):
        with pytest.raises(ValueError):
            tree_of_perm(P("2413"), 5)

    def test_bad_order_rejected(self):
        with pytest.raises(ValueError):
            tree_of_perm(P("1"), 1)

    def test_roundtrip_all_baxter(self, baxter_by_n):
        for n in range(1, 8):
            for p in baxter_by_n[n]:
                t = tree_of_perm(p, 7)
                assert t is not None
                check_tree(t, 7)
                assert perm_of_tree(t) == p


class TestPredicates:
    def test_is_hrd_examples(self):
        for k in range(2, 8):
            assert not is_hrd(P("2413"), k)
        assert is_hrd(P("41352"), 5)
        assert not is_hrd(P("41352"), 4)

    def test_is_hrd_monotone_in_k(self, baxter_by_n):
        for p in baxter_by_n[6]:
            for k in range(2, 6):
                if is_hrd(p, k):
                    assert is_hrd(p, k + 1)

    def test_is_ihrd_examples(self):
        assert is_ihrd(P("41352")) and is_ihrd(P("25314"))
        assert not is_ihrd(P("2413")) and not is_ihrd(P("3142"))
        assert is_ihrd(P("12")) and is_ihrd(P("21"))
        assert not is_ihrd(P("1"))

    def test_ihrd_is_strictly_irreducible(self):
        for p in (P("41352"), P("25314"), P("2475316")):
            n = len(p)
            assert is_hrd(p, n) and not is_hrd(p, n - 1)

    def test_hierarchy_order(self):
        assert hierarchy_order(P("1")) == 1
        assert hierarchy_order(P("12")) == 2
        assert hierarchy_order(P("41352")) == 5
        assert hierarchy_order(P("451362")) == 5
        with pytest.raises(ValueError):
            hierarchy_order(P("2413"))


class TestFloorplanOfTree:
    def test_leaf(self):
        assert floorplan_of_tree(Leaf()).n == 1

    def test_two_room_cut(self):
        f = floorplan_of_tree(Node(P("21"), (Leaf(), Leaf())))
        assert validate(f) and fp2bp(f) == P("21")

    def test_roundtrip_over_small_trees(self):
        for n in range(1, 7):
            for t in enumerate_trees(7, n):
                f = floorplan_of_tree(t)
                assert validate(f)
                assert fp2bp(f) == perm_of_tree(t)


class TestEnumerateTrees:
    def test_counts(self):
        assert sum(1 for _ in enumerate_trees(2, 3)) == 6
        assert sum(1 for _ in enumerate_trees(5, 5)) == 92
        for k in (2, 5, 9):
            assert list(enumerate_trees(k, 1)) == [Leaf()]

    def test_leaf_counts_and_invariants(self):
        for t in enumerate_trees(5, 6):
            assert leaf_count(t) == 6
            check_tree(t, 5)

    def test_injective_with_exact_image(self, baxter_by_n):
        for k in (2, 3, 5, 7):
            for n in range(1, 7):
                perms = [perm_of_tree(t) for t in enumerate_trees(k, n)]
                assert len({q.values for q in perms}) == len(perms)
                expect = {p.values for p in baxter_by_n[n] if is_hrd(p, k)}
                assert {q.values for q in perms} == expect

    def test_tree_roundtrip_over_enumeration(self):
        for k in (2, 5):
            for n in range(1, 7):
                for t in enumerate_trees(k, n):
                    assert tree_of_perm(perm_of_tree(t), k) == t

    def test_deterministic_order(self):
        first = [format_tree(t) for t in enumerate_trees(5, 5)]
        second = [format_tree(t) for t in enumerate_trees(5, 5)]
        assert first == second


class TestTextFormat:
    def test_example_tree_roundtrip(self):
        text = "(41352 (12 . .) . . . .)"
        assert format_tree(parse_tree(text)) == text

    def test_leaf(self):
        assert parse_tree(".") == Leaf()
        assert format_tree(Leaf()) == "."

    def test_spaced_labels_accepted(self):
        assert parse_tree("(4 1 3 5 2 . . . . .)") == parse_tree("(41352 . . . . .)")

    @pytest.mark.parametrize(
        "bad",
        [
            "",
            "(12 .)",  # arity violation
            "(12 (12 . .) .)",  # skew violation
            "(132 . . .)",  # label not simple
            "(2413 . . . .)",  # label not Baxter
            "(41352 . . . . .",  # unterminated
            "(41352 . . . . .) .",  # trailing content
            "(x . .)",
        ],
    )
    def test_rejects(self, bad):
        with pytest.raises(ValueError):
            parse_tree(bad)

    @given(st.integers(1, 6), st.randoms(use_true_random=False))
    @settings(max_examples=60, deadline=None)
    def test_format_parse_roundtrip(self, n, rng):
        trees = list(enumerate_trees(5, n))
        t = rng.choice(trees)
        assert parse_tree(format_tree(t)) == t
