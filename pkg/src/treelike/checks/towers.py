"""Checks on towers: witness-level identities and homogenization."""

from __future__ import annotations

import itertools
import random
import time

from loguru import logger

from treelike.representations.towers import (
    L1_SIGNATURE,
    L2_SIGNATURE,
    Tower,
    atom,
    canonical_completion,
    complete,
    homogenization_failures,
    induced_tower,
    random_tower,
    reduct,
    validate_tower,
)

from .base import CheckResult, failure_count_check


def run_identity_checks(tower: Tower) -> list[CheckResult]:
    """R is P both ways, and Q is Q<= together with Q>=, on every admissible tuple."""
    points = tower.points
    triples = list(itertools.permutations(points, 3))
    quadruples = list(itertools.permutations(points, 4))

    r_failures, r_total = 0, 0
    for left, right in itertools.product(triples, repeat=2):
        r_total += 1
        tup = (*left, *right)
        expected = atom(tower, "P", tup) and atom(tower, "P", (*right, *left))
        if atom(tower, "R", tup) != expected:
            r_failures += 1

    q_failures, q_total = 0, 0
    for left, right in itertools.product(quadruples, triples):
        q_total += 1
        tup = (*left, *right)
        if atom(tower, "Q", tup) != (atom(tower, "Q<=", tup) and atom(tower, "Q>=", tup)):
            q_failures += 1

    return [
        failure_count_check("R iff P both ways", r_failures, r_total),
        failure_count_check("Q iff Q<= and Q>=", q_failures, q_total),
    ]


def run_completion_checks(tower: Tower, subsets: list[list[str]]) -> list[CheckResult]:
    grows, valid, idempotent = 0, 0, 0
    for subset in subsets:
        completed = complete(tower, subset)
        grows += not set(subset) <= set(completed)
        valid += not validate_tower(induced_tower(tower, completed)).ok
        idempotent += complete(tower, completed) != completed
    return [
        failure_count_check("completion contains its input", grows, len(subsets)),
        failure_count_check("completion induces a valid tower", valid, len(subsets)),
        failure_count_check("completion is idempotent", idempotent, len(subsets)),
    ]


def run_canonical_completion_checks(tower: Tower, subsets: list[list[str]]) -> list[CheckResult]:
    valid, faithful = 0, 0
    for subset in subsets:
        completion = canonical_completion(tower, subset)
        valid += not validate_tower(completion.tower).ok
        faithful += any(
            reduct(completion.tower, completion.subset, signature).relations
            != reduct(tower, completion.subset, signature).relations
            for signature in (L1_SIGNATURE, L2_SIGNATURE)
        )
    return [
        failure_count_check("canonical completion is a valid tower", valid, len(subsets)),
        failure_count_check("canonical completion keeps the subset's type", faithful, len(subsets)),
    ]


def run_homogenization_checks(
    rng: random.Random, pairs: int, max_points: int = 6, max_size: int = 5
) -> list[CheckResult]:
    start = time.perf_counter()
    failures = 0
    example = None
    for pair in range(pairs):
        tower1 = random_tower(rng, rng.randint(3, max_points), num_levels=2)
        tower2 = random_tower(rng, rng.randint(3, max_points), num_levels=2)
        found = homogenization_failures(tower1, tower2, max_size)
        if found:
            failures += 1
            example = example or f"pair {pair}: {found[0]}"
        logger.debug(f"Homogenization pair {pair}: {len(found)} failures")

    subsets: list[list[str]] = []
    tower = random_tower(rng, max_points, num_levels=2)
    for _ in range(20):
        subsets.append(rng.sample(tower.points, rng.randint(1, len(tower.points))))
    completion = [
        *run_canonical_completion_checks(tower, subsets),
        *run_completion_checks(tower, subsets),
    ]

    logger.info(f"Checked {pairs} tower pairs in {time.perf_counter() - start:.2f}s")
    return [
        failure_count_check("L2-isomorphisms extend to completions", failures, pairs, example),
        *completion,
    ]


__all__ = [
    "run_identity_checks",
    "run_completion_checks",
    "run_canonical_completion_checks",
    "run_homogenization_checks",
]
