"""Randomized checks of the C-relation axioms and the V preorder laws."""

from __future__ import annotations

import random
import time
from collections import Counter
from collections.abc import Callable

from loguru import logger

from treelike.representations.leveled import atom_C, atom_V, random_points

from .base import CheckResult, failure_count_check

#: A law takes six pairwise distinct points; most use only the first four.
type Law = Callable[..., bool]


def _implies(premise: bool, conclusion: bool) -> bool:
    return not premise or conclusion


#: Laws over random distinct points a, b, c, d, e, f.
LAWS: dict[str, Law] = {
    "C symmetric in its last two arguments": lambda a, b, c, d, *_: _implies(
        atom_C(a, b, c), atom_C(a, c, b)
    ),
    "C antisymmetric": lambda a, b, c, d, *_: _implies(atom_C(a, b, c), not atom_C(b, a, c)),
    "C exchange": lambda a, b, c, d, *_: _implies(
        atom_C(a, b, c), atom_C(a, d, c) or atom_C(d, b, c)
    ),
    "C holds of a repeated pair": lambda a, b, c, d, *_: atom_C(a, b, b),
    "V total": lambda a, b, c, d, *_: atom_V(a, b, c, d) or atom_V(c, d, a, b),
    "V transitive along a chain": lambda a, b, c, d, *_: _implies(
        atom_V(a, b, b, c) and atom_V(b, c, c, d), atom_V(a, b, c, d)
    ),
    "V transitive": lambda a, b, c, d, e, f: _implies(
        atom_V(a, b, c, d) and atom_V(c, d, e, f), atom_V(a, b, e, f)
    ),
    "C agrees with V": lambda a, b, c, d, *_: atom_C(a, b, c)
    == (atom_V(a, b, b, c) and not atom_V(b, c, a, b)),
}


def run_axiom_checks(rng: random.Random, samples: int) -> list[CheckResult]:
    start = time.perf_counter()
    failures: Counter[str] = Counter()
    examples: dict[str, str] = {}
    for _ in range(samples):
        points = random_points(rng, 6)
        for name, law in LAWS.items():
            if not law(*points):
                failures[name] += 1
                examples.setdefault(name, ", ".join(map(str, points)))
    logger.info(f"Checked {len(LAWS)} laws on {samples} samples in {time.perf_counter() - start:.2f}s")
    return [
        failure_count_check(name, failures[name], samples, examples.get(name)) for name in LAWS
    ]


__all__ = ["LAWS", "run_axiom_checks"]
