# pyright: reportUnusedFunction = false

from __future__ import annotations

import pytest

from treelike.representations.leveled import LeveledPoint
from treelike.representations.structure import FinStructure, Signature
from test_utils.structure_matchers import (
    assert_isomorphism,
    assert_partial_isomorphism,
    assert_structures_match,
    path_tree,
    star,
)

GRAPH = Signature.of(("E", 2))


def describe_assert_structures_match() -> None:
    def should_match_equal_structures() -> None:
        s1 = FinStructure.build(GRAPH, [1, 2], {"E": [(1, 2)]})
        s2 = FinStructure.build(GRAPH, [2, 1], {"E": [(1, 2)]})

        assert_structures_match(s1, s2)

    def should_mismatch_with_universe() -> None:
        s1 = FinStructure.build(GRAPH, [1, 2], {})
        s2 = FinStructure.build(GRAPH, [1, 3], {})

        with pytest.raises(AssertionError):
            assert_structures_match(s1, s2)

    def should_mismatch_with_extra_tuple() -> None:
        s1 = FinStructure.build(GRAPH, [1, 2], {"E": [(1, 2)]})
        s2 = FinStructure.build(GRAPH, [1, 2], {})

        with pytest.raises(AssertionError):
            assert_structures_match(s1, s2)

    def should_mismatch_with_signature() -> None:
        s1 = FinStructure.build(GRAPH, [1], {})
        s2 = FinStructure.build(Signature.of(("F", 2)), [1], {})

        with pytest.raises(AssertionError):
            assert_structures_match(s1, s2)


def describe_assert_isomorphism() -> None:
    def should_accept_relabelling() -> None:
        s1 = FinStructure.build(GRAPH, [1, 2], {"E": [(1, 2)]})
        s2 = FinStructure.build(GRAPH, ["a", "b"], {"E": [("b", "a")]})

        assert_isomorphism({1: "b", 2: "a"}, s1, s2)

    def should_reject_maps_breaking_edges() -> None:
        s1 = FinStructure.build(GRAPH, [1, 2], {"E": [(1, 2)]})
        s2 = FinStructure.build(GRAPH, ["a", "b"], {"E": [("b", "a")]})

        with pytest.raises(AssertionError):
            assert_isomorphism({1: "a", 2: "b"}, s1, s2)

    def should_reject_partial_maps() -> None:
        s1 = FinStructure.build(GRAPH, [1, 2], {})
        s2 = FinStructure.build(GRAPH, ["a", "b"], {})

        with pytest.raises(AssertionError):
            assert_isomorphism({1: "a"}, s1, s2)


def describe_assert_partial_isomorphism() -> None:
    def should_accept_shifted_words() -> None:
        dom = [LeveledPoint({1: 1}), LeveledPoint({1: 2}), LeveledPoint({1: 2, 3: 1})]
        img = [LeveledPoint({2: 5}), LeveledPoint({2: 7}), LeveledPoint({2: 7, 4: 1})]

        assert_partial_isomorphism(dom, img)

    def should_reject_changed_meet_order() -> None:
        dom = [LeveledPoint({1: 1}), LeveledPoint({1: 2}), LeveledPoint({1: 2, 3: 1})]
        img = [LeveledPoint({2: 5}), LeveledPoint({2: 5, 4: 1}), LeveledPoint({2: 7})]

        with pytest.raises(AssertionError):
            assert_partial_isomorphism(dom, img)

    def should_reject_length_mismatch() -> None:
        with pytest.raises(AssertionError):
            assert_partial_isomorphism([LeveledPoint({1: 1})], [])


def describe_tree_builders() -> None:
    def should_build_star() -> None:
        tree = star("c", ["x", "y", "z"], "y")

        assert tree.special == {"c": "d_y"}
        assert tree.leaf_of("z") == "d_z"

    def should_chain_path_groups() -> None:
        tree = path_tree([("u1", ["a", "b"], "a"), ("u2", ["c", "d"], "d")])

        assert tree.is_tree()
        assert tree.neighbors("u1") == ["d_a", "d_b", "u2"]
        assert tree.special == {"u1": "d_a", "u2": "d_d"}
