# pyright: reportUnusedFunction = false

from __future__ import annotations

import math
from fractions import Fraction

import pytest

from treelike.errors import ModelError
from treelike.growth import MAX_GROWTH_LENGTH, growth_lower_bound, triviality_failure_witness


def describe_growth_lower_bound() -> None:
    @pytest.mark.parametrize("n", [1, 2, 3])
    def should_separate_all_encodings(n: int) -> None:
        assert growth_lower_bound(n) == math.factorial(n)

    @pytest.mark.slow
    def should_separate_all_encodings_of_length_four() -> None:
        assert growth_lower_bound(4) == 24

    def should_reject_lengths_beyond_desk_scale() -> None:
        with pytest.raises(ModelError, match="exceeds desk scale"):
            growth_lower_bound(MAX_GROWTH_LENGTH + 1)

    def should_reject_nonpositive_lengths() -> None:
        with pytest.raises(ModelError, match="must be positive"):
            growth_lower_bound(0)


def describe_triviality_failure_witness() -> None:
    @pytest.mark.parametrize("n", [3, 8])
    def should_witness_failure(n: int) -> None:
        report = triviality_failure_witness(n)

        assert report.uniform_over_b
        assert report.uniform_over_c
        assert report.differing_pair == ((1, 2), (2, 3))
        assert report.witnesses_failure

    def should_default_cut_between_first_values() -> None:
        assert triviality_failure_witness(3).cut == Fraction(3, 2)

    def should_find_no_difference_above_all_values() -> None:
        report = triviality_failure_witness(8, cut=Fraction(10))

        assert report.uniform_over_b
        assert report.uniform_over_c
        assert report.differing_pair is None
        assert not report.witnesses_failure

    def should_move_difference_with_cut() -> None:
        report = triviality_failure_witness(5, cut=Fraction(7, 2))

        assert report.differing_pair == ((1, 2), (1, 4))

    def should_reject_short_sequences() -> None:
        with pytest.raises(ModelError, match="needs n ≥ 3"):
            triviality_failure_witness(2)

    def should_reject_nonpositive_cuts() -> None:
        with pytest.raises(ModelError, match="must be positive"):
            triviality_failure_witness(4, cut=Fraction(-1))
