"""Seeded random generators for points and level trees."""

from __future__ import annotations

import random
from collections.abc import Sequence
from fractions import Fraction

from .level_tree import LevelTree, extract_level_tree
from .points import LeveledPoint

#: Positions random points are drawn from.
DEFAULT_LEVELS = tuple(
    Fraction(q) for q in ("-2", "-1", "-1/2", "0", "1/3", "1/2", "1", "2")
)


def random_point(
    rng: random.Random,
    levels: Sequence[Fraction] = DEFAULT_LEVELS,
    max_letter: int = 3,
) -> LeveledPoint:
    support = rng.sample(list(levels), rng.randint(0, len(levels)))
    return LeveledPoint({q: rng.randint(1, max_letter) for q in support})


def random_points(
    rng: random.Random,
    count: int,
    levels: Sequence[Fraction] = DEFAULT_LEVELS,
    max_letter: int = 3,
    exclude: Sequence[LeveledPoint] = (),
) -> list[LeveledPoint]:
    """`count` pairwise distinct random points, none of them in `exclude`."""
    seen = set(exclude)
    points: list[LeveledPoint] = []
    while len(points) < count:
        point = random_point(rng, levels, max_letter)
        if point not in seen:
            seen.add(point)
            points.append(point)
    return points


def random_level_tree(rng: random.Random, max_leaves: int = 6) -> LevelTree:
    return extract_level_tree(random_points(rng, rng.randint(1, max_leaves)))


def perturb(points: Sequence[LeveledPoint], rng: random.Random) -> list[LeveledPoint]:
    """Relabel levels increasingly and letters bijectively per level.

    The result satisfies exactly the same C- and V-atoms as the input.
    """
    scale = Fraction(rng.randint(1, 4), rng.randint(1, 4))
    shift = Fraction(rng.randint(-5, 5), rng.randint(1, 3))
    used: dict[Fraction, set[int]] = {}
    for point in points:
        for q, letter in point.word:
            used.setdefault(q, set()).add(letter)

    relabel: dict[Fraction, dict[int, int]] = {}
    for q, letters in sorted(used.items()):
        targets = rng.sample(range(1, len(letters) + 3), len(letters))
        relabel[q] = dict(zip(sorted(letters), targets, strict=True))

    return [
        LeveledPoint({scale * q + shift: relabel[q][letter] for q, letter in p.word})
        for p in points
    ]


__all__ = [
    "DEFAULT_LEVELS",
    "random_point",
    "random_points",
    "random_level_tree",
    "perturb",
]
