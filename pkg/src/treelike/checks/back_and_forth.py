"""Randomized back-and-forth: extend isomorphisms between two realizations of a level tree."""

from __future__ import annotations

import random
import time

from loguru import logger

from treelike.representations.leveled import (
    extend_one_point,
    is_partial_isomorphism,
    perturb,
    random_level_tree,
    random_points,
    realize,
)

from .base import CheckResult, failure_count_check


def run_back_and_forth(
    rng: random.Random, trials: int, extensions: int = 3, max_leaves: int = 6
) -> list[CheckResult]:
    start = time.perf_counter()
    failures = 0
    example = None
    for trial in range(trials):
        points = realize(random_level_tree(rng, max_leaves))
        dom, img = list(points), perturb(points, rng)
        for extra in random_points(rng, extensions, exclude=dom):
            img.append(extend_one_point(dom, img, extra))
            dom.append(extra)
        if not is_partial_isomorphism(dom, img):
            failures += 1
            example = example or f"trial {trial}"
    logger.info(f"Ran {trials} back-and-forth trials in {time.perf_counter() - start:.2f}s")
    return [failure_count_check("extensions stay partial isomorphisms", failures, trials, example)]


__all__ = ["run_back_and_forth"]
