# pyright: reportUnusedFunction = false

from __future__ import annotations

import itertools
import math

import pytest

from treelike.errors import ModelError
from treelike.representations.leveled import count_iso_types, series_reduced_shapes


def describe_series_reduced_shapes() -> None:
    @pytest.mark.parametrize("leaves, expected", [(1, 1), (2, 1), (3, 2), (4, 5), (5, 12), (6, 33)])
    def should_count_unlabelled_shapes(leaves: int, expected: int) -> None:
        assert len(series_reduced_shapes(leaves)) == expected


def describe_count_iso_types() -> None:
    @pytest.mark.parametrize("k, expected", [(1, 1), (2, 1), (3, 2), (4, 6)])
    def should_count_small_sizes(k: int, expected: int) -> None:
        assert count_iso_types(k) == expected

    def should_be_nondecreasing() -> None:
        counts = [count_iso_types(k) for k in range(1, 6)]

        assert all(a <= b for a, b in itertools.pairwise(counts))

    @pytest.mark.slow
    def should_be_nondecreasing_up_to_six() -> None:
        assert count_iso_types(5) <= count_iso_types(6)

    @pytest.mark.slow
    @pytest.mark.parametrize("n", [1, 2])
    def should_bound_permutation_growth(n: int) -> None:
        assert count_iso_types(2 * n + 3) >= math.factorial(n)

    def should_reject_nonpositive_sizes() -> None:
        with pytest.raises(ModelError, match="k must be positive"):
            count_iso_types(0)
