# pyright: reportUnusedFunction = false

from __future__ import annotations

import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from treelike.errors import ModelError
from treelike.representations.towers import random_dtree, random_tower, validate_tower


def describe_random_dtree() -> None:
    def should_host_classes_in_order(rng: random.Random) -> None:
        classes = [frozenset({"a", "b"}), frozenset({"c"}), frozenset({"d"}), frozenset({"e"})]

        tree = random_dtree(rng, classes)

        assert [tree.leaves[f"d{i}"] for i in range(4)] == classes
        assert tree.is_tree()

    def should_build_single_leaf(rng: random.Random) -> None:
        tree = random_dtree(rng, [frozenset({"a"})])

        assert tree.nodes == ("d0",)

    def should_build_single_edge(rng: random.Random) -> None:
        tree = random_dtree(rng, [frozenset({"a"}), frozenset({"b"})])

        assert tree.edges == [("d0", "d1")]
        assert tree.inner_nodes == []

    def should_prefix_node_names(rng: random.Random) -> None:
        tree = random_dtree(rng, [frozenset({p}) for p in "abc"], prefix="u")

        assert set(tree.nodes) == {"un0", "ud0", "ud1", "ud2"}

    def should_reject_empty_class_lists(rng: random.Random) -> None:
        with pytest.raises(ModelError, match="at least one class"):
            random_dtree(rng, [])


def describe_random_tower() -> None:
    @given(
        st.integers(min_value=0, max_value=10_000),
        st.integers(min_value=1, max_value=9),
        st.sampled_from([1, 2]),
        st.booleans(),
    )
    def should_be_valid(seed: int, num_points: int, num_levels: int, singleton_leaves: bool) -> None:
        tower = random_tower(random.Random(seed), num_points, num_levels, singleton_leaves)

        assert validate_tower(tower).ok
        assert tower.points == tuple(sorted(f"p{i}" for i in range(num_points)))

    def should_be_reproducible() -> None:
        first = random_tower(random.Random(7), 8)
        second = random_tower(random.Random(7), 8)

        assert [t.edges for t in first.levels] == [t.edges for t in second.levels]
        assert first.exit == second.exit

    def should_respect_level_count(rng: random.Random) -> None:
        assert random_tower(rng, 6, num_levels=1).num_levels == 1

    @pytest.mark.parametrize(
        ("num_points", "num_levels", "message"),
        [
            pytest.param(0, 1, "at least one point", id="no points"),
            pytest.param(4, 3, "supports 1 or 2 levels", id="too many levels"),
        ],
    )
    def should_reject_bad_parameters(rng: random.Random, num_points: int, num_levels: int, message: str) -> None:
        with pytest.raises(ModelError, match=message):
            random_tower(rng, num_points, num_levels)
