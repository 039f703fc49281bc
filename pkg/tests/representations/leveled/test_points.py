# pyright: reportUnusedFunction = false

from __future__ import annotations

from fractions import Fraction

import pytest

from treelike.errors import ModelError
from treelike.representations.leveled import LeveledPoint, atom_C, atom_V, meet_level


def p(word: dict[int, int] | dict[Fraction, int]) -> LeveledPoint:
    return LeveledPoint(word)


def describe_leveled_point() -> None:
    def should_drop_zero_letters() -> None:
        assert p({0: 1, 1: 0}) == p({0: 1})

    def should_sort_support() -> None:
        assert p({2: 1, -1: 3}).word == ((Fraction(-1), 3), (Fraction(2), 1))

    def should_read_absent_letters_as_zero() -> None:
        point = p({Fraction(1, 2): 4})

        assert point.letter(Fraction(1, 2)) == 4
        assert point.letter(0) == 0

    def should_reject_negative_letters() -> None:
        with pytest.raises(ValueError, match="must be positive"):
            p({0: -1})

    def should_reject_repeated_levels() -> None:
        with pytest.raises(ValueError, match="occurs twice"):
            LeveledPoint([(0, 1), (Fraction(0), 2)])

    def should_keep_letters_below_a_level() -> None:
        assert p({-1: 1, 0: 2, 1: 3}).below(Fraction(1)) == {Fraction(-1): 1, Fraction(0): 2}

    def should_be_hashable() -> None:
        assert len({p({0: 1}), p({0: 1}), p({0: 2})}) == 2


def describe_meet_level() -> None:
    @pytest.mark.parametrize(
        "a, b, expected",
        [
            pytest.param({0: 1}, {0: 2}, 0, id="differ at 0"),
            pytest.param({0: 1}, {0: 1, 1: 1}, 1, id="extension"),
            pytest.param({-2: 1}, {-1: 1}, -2, id="first support"),
            pytest.param({}, {Fraction(1, 3): 2}, Fraction(1, 3), id="distinguished point"),
        ],
    )
    def should_find_first_disagreement(
        a: dict[int, int], b: dict[int, int], expected: Fraction
    ) -> None:
        assert meet_level(p(a), p(b)) == expected
        assert meet_level(p(b), p(a)) == expected

    def should_reject_equal_points() -> None:
        with pytest.raises(ModelError, match="meet undefined for equal points"):
            meet_level(p({0: 1}), p({0: 1}))


def describe_atom_C() -> None:
    def should_hold_for_repeated_pair() -> None:
        assert atom_C(p({0: 1}), p({0: 2}), p({0: 2}))

    def should_fail_when_all_equal() -> None:
        assert not atom_C(p({0: 1}), p({0: 1}), p({0: 1}))

    def should_compare_meets() -> None:
        assert atom_C(p({0: 1}), p({0: 2}), p({0: 2, 1: 1}))

    def should_fail_on_equal_meets() -> None:
        assert not atom_C(p({0: 1}), p({0: 1, 1: 1}), p({0: 1, 1: 2}))

    def should_fail_with_repeated_first_argument() -> None:
        assert not atom_C(p({0: 1}), p({0: 1}), p({0: 2}))


def describe_atom_V() -> None:
    a, b, c, d = p({-2: 1}), p({-1: 1}), p({0: 1}), p({0: 2})

    def should_be_reflexive() -> None:
        assert atom_V(a, b, a, b)

    def should_compare_meet_levels() -> None:
        assert atom_V(a, b, c, d)
        assert not atom_V(c, d, a, b)

    def should_fail_on_equal_pairs() -> None:
        assert not atom_V(a, a, c, d)
        assert not atom_V(a, b, c, c)
