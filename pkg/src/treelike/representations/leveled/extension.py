"""One-point extension of partial isomorphisms and algebraic-closure witnesses."""

from __future__ import annotations

import itertools
from collections.abc import Sequence
from fractions import Fraction

from loguru import logger

from treelike.errors import ModelError

from .diagram import is_partial_isomorphism
from .points import LeveledPoint, meet_level


def _choose_level(
    dom: Sequence[LeveledPoint],
    img: Sequence[LeveledPoint],
    j0: int,
    level: Fraction,
) -> Fraction:
    """The image-side level corresponding to `level` on the domain side."""
    n = len(dom)
    pairs = list(itertools.combinations(range(n), 2))

    # Case 1: the level is a meet of dom[j0] with another domain point.
    for k in range(n):
        if k != j0 and meet_level(dom[j0], dom[k]) == level:
            logger.trace(f"Extension case 1 with k0={k}")
            return meet_level(img[j0], img[k])

    # Case 2: the level is some other meet of domain points.
    for k, l in pairs:
        if meet_level(dom[k], dom[l]) == level:
            logger.trace(f"Extension case 2 with k0={k}, l0={l}")
            return meet_level(img[k], img[l])

    # Case 3: a new level, placed between the neighbouring image levels.
    below = [
        meet_level(img[k], img[l]) for k, l in pairs if meet_level(dom[k], dom[l]) < level
    ]
    above = [
        meet_level(img[k], img[l]) for k, l in pairs if meet_level(dom[k], dom[l]) > level
    ]
    logger.trace("Extension case 3")
    if below and above:
        return (max(below) + min(above)) / 2
    if below:
        return max(below) + 1
    if above:
        return min(above) - 1
    return Fraction(0)


def extend_one_point(
    dom: Sequence[LeveledPoint],
    img: Sequence[LeveledPoint],
    a: LeveledPoint,
) -> LeveledPoint:
    """Image b for `a` such that dom + [a] ↦ img + [b] is a partial isomorphism."""
    if not is_partial_isomorphism(dom, img):
        raise ModelError("point map", "not a partial isomorphism")
    if a in dom:
        raise ModelError("extension point", "point already in domain")
    if not dom:
        return LeveledPoint()

    meets = [meet_level(a, d) for d in dom]
    level = max(meets)
    j0 = meets.index(level)
    q = _choose_level(dom, img, j0, level)

    anchor = img[j0]
    fresh = 1 + max(point.letter(q) for point in img)
    word = anchor.below(q)
    word[q] = fresh
    return LeveledPoint(word)


def acl_witnesses(
    base: Sequence[LeveledPoint], a: LeveledPoint, k: int
) -> list[LeveledPoint]:
    """k distinct points realizing the same quantifier-free type over `base` as `a`.

    Each witness agrees with `a` below a level Q above every meet among
    base + [a], takes letter i at Q, and is empty above.
    """
    if a in base:
        raise ModelError("acl instance", "point already in base set")
    if k < 1:
        raise ModelError("acl instance", f"witness count must be positive, got {k}")

    points = [*base, a]
    levels = [meet_level(x, y) for x, y in itertools.combinations(points, 2)]
    q = max(levels) + 1 if levels else Fraction(0)
    prefix = a.below(q)
    return [LeveledPoint({**prefix, q: i}) for i in range(1, k + 1)]


__all__ = ["extend_one_point", "acl_witnesses"]
