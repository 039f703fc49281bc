"""Miscellaneous utilities."""

from __future__ import annotations

from typing import TypeVar

import itertools
from collections.abc import Hashable, Iterable

_T = TypeVar("_T")
_H = TypeVar("_H", bound=Hashable)


def first(it: Iterable[_T]) -> _T | None:
    """Get the first element of an arbitrary iterable, or None."""
    return next(iter(it), None)


def find_duplicate(it: Iterable[_H]) -> _H | None:
    """Get the first element that occurs a second time, or None."""
    seen: set[_H] = set()
    for el in it:
        if el in seen:
            return el
        seen.add(el)
    return None


def count_alternations(values: Iterable[bool]) -> int:
    """Number of adjacent positions whose truth values differ."""
    return sum(1 for left, right in itertools.pairwise(values) if left != right)
