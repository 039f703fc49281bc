"""Points of the leveled C-structure and their atomic relations.

A point is a finitely supported word indexed by the rationals. Positions
outside the support carry the distinguished letter, encoded as 0; stored
letters are positive integers.
"""

from __future__ import annotations

from typing import Any, override

from collections.abc import Iterable, Mapping
from fractions import Fraction

import attrs
from attrs import field, frozen

from treelike.errors import ModelError

type Level = Fraction
type Word = tuple[tuple[Fraction, int], ...]


def _normalize_word(value: Any) -> Word:
    pairs: Iterable[tuple[Any, Any]] = (
        value.items() if isinstance(value, Mapping) else value
    )
    letters: dict[Fraction, int] = {}
    for level, letter in pairs:
        level = Fraction(level)
        if level in letters:
            raise ValueError(f"Level {level} occurs twice in word")
        if letter != 0:
            letters[level] = letter
    return tuple(sorted(letters.items()))


def _validate_word(instance: Any, attribute: attrs.Attribute[Any], value: Word) -> None:
    for level, letter in value:
        if not isinstance(letter, int) or isinstance(letter, bool):
            raise TypeError(f"Letter at level {level} must be an int, got {letter!r}")
        if letter < 1:
            raise ValueError(f"Letter at level {level} must be positive, got {letter}")


@frozen
class LeveledPoint:
    """A finite-support word; the empty word is the distinguished point.

    Zero letters given on construction are dropped.
    """

    word: Word = field(default=(), converter=_normalize_word, validator=_validate_word)

    @property
    def support(self) -> dict[Fraction, int]:
        return dict(self.word)

    def letter(self, level: Fraction | int) -> int:
        for q, letter in self.word:
            if q == level:
                return letter
        return 0

    def below(self, level: Fraction) -> dict[Fraction, int]:
        """Letters at positions strictly below `level`."""
        return {q: letter for q, letter in self.word if q < level}

    @override
    def __str__(self) -> str:
        return "{" + ", ".join(f"{q}↦{letter}" for q, letter in self.word) + "}"


def meet_level(a: LeveledPoint, b: LeveledPoint) -> Fraction:
    """Least position at which the two points disagree."""
    if a == b:
        raise ModelError("point pair", "meet undefined for equal points")

    letters_a = a.support
    letters_b = b.support
    for level in sorted(letters_a.keys() | letters_b.keys()):
        if letters_a.get(level, 0) != letters_b.get(level, 0):
            return level
    raise AssertionError("distinct normalized words must disagree somewhere")


def atom_C(a: LeveledPoint, b: LeveledPoint, c: LeveledPoint) -> bool:
    if b == c:
        return a != b
    if a == b or a == c:
        return False
    return meet_level(a, b) < meet_level(b, c)


def atom_V(a: LeveledPoint, b: LeveledPoint, c: LeveledPoint, d: LeveledPoint) -> bool:
    if a == b or c == d:
        return False
    return meet_level(a, b) <= meet_level(c, d)


__all__ = ["Level", "LeveledPoint", "meet_level", "atom_C", "atom_V"]
