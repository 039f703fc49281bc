"""Exhaustive enumeration of level-tree isomorphism types."""

from __future__ import annotations

import functools
import itertools
import time
from collections import Counter
from collections.abc import Iterator

from loguru import logger

from treelike.errors import ModelError

from .level_tree import LEAF_CODE, shape_code

# An unordered rooted tree; the empty tuple is a leaf, children are sorted.
type Shape = tuple[Shape, ...]

LEAF: Shape = ()


def _partitions(total: int, largest: int) -> Iterator[tuple[int, ...]]:
    if total == 0:
        yield ()
        return
    for part in range(min(total, largest), 0, -1):
        for rest in _partitions(total - part, part):
            yield (part, *rest)


@functools.cache
def series_reduced_shapes(leaves: int) -> tuple[Shape, ...]:
    """Rooted trees with `leaves` leaves whose internal nodes have ≥ 2 children."""
    if leaves == 1:
        return (LEAF,)

    shapes: set[Shape] = set()
    for partition in _partitions(leaves, leaves - 1):
        per_size = [
            itertools.combinations_with_replacement(series_reduced_shapes(size), count)
            for size, count in sorted(Counter(partition).items())
        ]
        for choice in itertools.product(*per_size):
            shapes.add(tuple(sorted(itertools.chain.from_iterable(choice))))
    return tuple(sorted(shapes))


class _IndexedShape:
    def __init__(self, shape: Shape) -> None:
        self.children: list[list[int]] = []
        self.root = self._add(shape)

    def _add(self, shape: Shape) -> int:
        idx = len(self.children)
        self.children.append([])
        self.children[idx] = [self._add(child) for child in shape]
        return idx

    def is_internal(self, idx: int) -> bool:
        return bool(self.children[idx])

    def rankings(self) -> Iterator[dict[int, int]]:
        """All weak orders on internal nodes that increase from parent to child."""
        assignment: dict[int, int] = {}

        def go(available: frozenset[int], rank: int) -> Iterator[dict[int, int]]:
            if not available:
                yield dict(assignment)
                return
            items = sorted(available)
            for size in range(1, len(items) + 1):
                for chosen in itertools.combinations(items, size):
                    for node in chosen:
                        assignment[node] = rank
                    unlocked = {
                        child
                        for node in chosen
                        for child in self.children[node]
                        if self.is_internal(child)
                    }
                    yield from go((available - set(chosen)) | unlocked, rank + 1)
                    for node in chosen:
                        del assignment[node]

        start = frozenset({self.root}) if self.is_internal(self.root) else frozenset()
        yield from go(start, 0)

    def code(self, ranking: dict[int, int]) -> str:
        def walk(idx: int) -> str:
            if not self.is_internal(idx):
                return LEAF_CODE
            return shape_code(ranking[idx], [walk(child) for child in self.children[idx]])

        return walk(self.root)


def count_iso_types(k: int) -> int:
    """Number of ranked level trees with k leaves up to isomorphism."""
    if k < 1:
        raise ModelError("orbit count", f"k must be positive, got {k}")

    start = time.perf_counter()
    codes: set[str] = set()
    shapes = series_reduced_shapes(k)
    for shape in shapes:
        indexed = _IndexedShape(shape)
        for ranking in indexed.rankings():
            codes.add(indexed.code(ranking))
    logger.debug(f"Enumerated {len(shapes)} shapes with {k} leaves")
    logger.info(
        f"Found {len(codes)} level-tree types with {k} leaves in {time.perf_counter() - start:.2f}s"
    )
    return len(codes)


__all__ = ["Shape", "series_reduced_shapes", "count_iso_types"]
