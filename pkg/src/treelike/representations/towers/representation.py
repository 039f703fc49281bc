"""Finite towers of D-set (and B-set) levels."""

from __future__ import annotations

from typing import Any, final

from collections.abc import Callable, Iterable, Mapping, Sequence

import attrs
from attrs import field, frozen

from treelike.errors import UnknownElementError
from treelike.types import PointId

from .trees import BTree, DTree


def _derived_exit(levels: Sequence[DTree | BTree]) -> dict[PointId, int]:
    exit: dict[PointId, int] = {}
    for j, tree in enumerate(levels, start=1):
        for point in tree.points:
            exit[point] = j
    return exit


def _check_nonempty(instance: Any, attribute: attrs.Attribute[Any], value: tuple[Any, ...]) -> None:
    if not value:
        raise ValueError("A tower needs at least one level")


def _check_exit(instance: Any, attribute: attrs.Attribute[Any], value: dict[PointId, int]) -> None:
    for point, level in value.items():
        if not isinstance(point, str) or not isinstance(level, int) or isinstance(level, bool):
            raise TypeError(f"Exit entry {point!r}: {level!r} must map a point id to an int")


class _LevelsMixin:
    levels: tuple[Any, ...]
    exit: dict[PointId, int]

    @property
    def num_levels(self) -> int:
        return len(self.levels)

    @property
    def points(self) -> tuple[PointId, ...]:
        """Points present at level 1, sorted."""
        return tuple(sorted(self.levels[0].points))

    def level(self, j: int) -> Any:
        """The tree at level j, counting from 1."""
        if not 1 <= j <= len(self.levels):
            raise UnknownElementError("tower", j, "no such level")
        return self.levels[j - 1]

    def present(self, point: PointId, j: int) -> bool:
        return self.level(j).hosts(point)

    def check_points(self, *points: PointId) -> None:
        known = self.levels[0].points
        for point in points:
            if point not in known:
                raise UnknownElementError("tower", point, "unknown point id")


@final
@frozen(eq=False)
class Tower(_LevelsMixin):
    """Levels 1..m of D-trees, level 1 lowest, plus the exit level of every point.

    Witness levels are memoized on the instance; towers must not be mutated
    after construction.
    """

    levels: tuple[DTree, ...] = field(converter=tuple, validator=_check_nonempty)
    exit: dict[PointId, int] = field(validator=_check_exit)

    _witnesses: dict[tuple[str, tuple[PointId, ...]], int | None] = field(
        factory=dict, init=False, repr=False
    )

    @classmethod
    def build(
        cls, levels: Iterable[DTree], exit: Mapping[PointId, int] | None = None
    ) -> Tower:
        """Construct a tower, deriving exit levels from presence when omitted."""
        levels = tuple(levels)
        return cls(levels, dict(exit) if exit is not None else _derived_exit(levels))

    def memoized(
        self, kind: str, points: tuple[PointId, ...], compute: Callable[[], int | None]
    ) -> int | None:
        key = (kind, points)
        if key not in self._witnesses:
            self._witnesses[key] = compute()
        return self._witnesses[key]


@final
@frozen(eq=False)
class BTower(_LevelsMixin):
    """Levels 1..m of B-trees, where points sit on arbitrary vertices."""

    levels: tuple[BTree, ...] = field(converter=tuple, validator=_check_nonempty)
    exit: dict[PointId, int] = field(validator=_check_exit)

    @classmethod
    def build(
        cls, levels: Iterable[BTree], exit: Mapping[PointId, int] | None = None
    ) -> BTower:
        levels = tuple(levels)
        return cls(levels, dict(exit) if exit is not None else _derived_exit(levels))


__all__ = ["Tower", "BTower"]
