# pyright: reportUnusedFunction = false

from __future__ import annotations

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from treelike.errors import ModelError
from treelike.representations.leveled import (
    LeveledPoint,
    acl_witnesses,
    extend_one_point,
    is_partial_isomorphism,
    meet_level,
    perturb,
    random_level_tree,
    random_points,
    realize,
)
from test_utils.structure_matchers import assert_partial_isomorphism


def p(word: dict[int, int]) -> LeveledPoint:
    return LeveledPoint(word)


def describe_extend_one_point() -> None:
    def should_map_into_empty_image() -> None:
        assert extend_one_point([], [], p({0: 1})) == LeveledPoint()

    def should_place_new_level_when_no_meet_matches() -> None:
        dom, img, a = [p({0: 1})], [p({5: 3})], p({0: 1, 1: 1})

        b = extend_one_point(dom, img, a)

        assert b == p({0: 1})
        assert_partial_isomorphism([*dom, a], [*img, b])

    def should_reuse_meet_with_anchor() -> None:
        dom = [p({0: 1}), p({0: 2, 1: 1}), p({0: 2, 1: 2})]
        img = [p({3: 1}), p({3: 2, 4: 5}), p({3: 2, 4: 6})]
        a = p({0: 2, 1: 3})

        b = extend_one_point(dom, img, a)

        assert b == p({3: 2, 4: 7})
        assert_partial_isomorphism([*dom, a], [*img, b])

    def should_reuse_meet_of_other_points() -> None:
        dom = [p({0: 1}), p({0: 2, 1: 1}), p({0: 2, 1: 2})]
        a = p({0: 1, 1: 1})

        b = extend_one_point(dom, dom, a)

        assert b == p({0: 1, 1: 3})
        assert_partial_isomorphism([*dom, a], [*dom, b])

    def should_split_inside_a_star_branch() -> None:
        dom = realize_star(3)
        img = [p({5: 2}), p({5: 1}), p({5: 7})]
        a = p({0: 1, 1: 1})

        b = extend_one_point(dom, img, a)

        assert meet_level(b, img[0]) > meet_level(img[0], img[1])
        assert_partial_isomorphism([*dom, a], [*img, b])

    def should_reject_non_isomorphic_maps() -> None:
        dom = [p({0: 1}), p({0: 2}), p({0: 2, 1: 1})]
        img = [p({0: 1}), p({0: 2}), p({0: 3})]

        with pytest.raises(ModelError, match="not a partial isomorphism"):
            extend_one_point(dom, img, p({1: 1}))

    def should_reject_points_in_domain() -> None:
        with pytest.raises(ModelError, match="already in domain"):
            extend_one_point([p({0: 1})], [p({0: 1})], p({0: 1}))

    @settings(max_examples=200)
    @given(st.integers(min_value=0, max_value=100_000))
    def should_extend_isomorphisms_between_realizations(seed: int) -> None:
        rng = random.Random(seed)
        dom = realize(random_level_tree(rng, max_leaves=6))
        img = perturb(dom, rng)

        for a in random_points(rng, 3, exclude=dom):
            img.append(extend_one_point(dom, img, a))
            dom.append(a)

        assert_partial_isomorphism(dom, img)


def realize_star(k: int) -> list[LeveledPoint]:
    return [p({0: i}) for i in range(1, k + 1)]


def describe_acl_witnesses() -> None:
    def should_realize_any_point_over_empty_base() -> None:
        witnesses = acl_witnesses([], p({0: 1}), 3)

        assert len(set(witnesses)) == 3

    def should_copy_prefix_below_new_level() -> None:
        witnesses = acl_witnesses([p({0: 1})], p({0: 2}), 2)

        assert witnesses == [p({0: 2, 1: 1}), p({0: 2, 1: 2})]
        assert all(meet_level(w, p({0: 1})) == 0 for w in witnesses)

    def should_reject_points_in_base() -> None:
        with pytest.raises(ModelError, match="already in base set"):
            acl_witnesses([p({0: 1})], p({0: 1}), 2)

    def should_reject_nonpositive_counts() -> None:
        with pytest.raises(ModelError, match="must be positive"):
            acl_witnesses([], p({0: 1}), 0)

    @given(st.integers(min_value=0, max_value=100_000))
    def should_realize_the_same_type_ten_times(seed: int) -> None:
        rng = random.Random(seed)
        *base, a = random_points(rng, rng.randint(1, 5))

        witnesses = acl_witnesses(base, a, 10)

        assert len(set(witnesses)) == 10
        assert all(is_partial_isomorphism([*base, a], [*base, w]) for w in witnesses)
