"""Desk-scale experiments on the permutation encoding."""

from __future__ import annotations

import itertools
import math
import time
from collections.abc import Sequence
from fractions import Fraction

from loguru import logger
from pydantic import BaseModel

from treelike.errors import ModelError
from treelike.representations.leveled import LeveledPoint, qf_structure
from treelike.representations.structure import canonical_code

from .encoding import encode_perm
from .perms import Perm

#: Largest permutation length growth_lower_bound accepts.
MAX_GROWTH_LENGTH = 5


def growth_lower_bound(n: int) -> int:
    """Number of pairwise non-isomorphic encodings of the permutations of length n."""
    if n < 1:
        raise ModelError("growth bound", f"n must be positive, got {n}")
    if n > MAX_GROWTH_LENGTH:
        raise ModelError("growth bound", "exceeds desk scale", extra_msg=f"n={n}")

    start = time.perf_counter()
    codes: set[bytes] = set()
    for sigma in Perm.all(n):
        codes.add(canonical_code(qf_structure(encode_perm(sigma).points)))
        logger.debug(f"Encoded {sigma}: {len(codes)} distinct codes so far")
    logger.info(
        f"{len(codes)} isomorphism types among {math.factorial(n)} encodings "
        f"of size {2 * n + 3} ({time.perf_counter() - start:.2f}s)"
    )
    return len(codes)


class TrivialityReport(BaseModel, frozen=True, extra="forbid"):
    n: int
    #: Level of the meet of the two extra points.
    cut: Fraction
    #: All increasing block pairs share a type over the anchors and b.
    uniform_over_b: bool
    #: All increasing block pairs share a type over the anchors and c.
    uniform_over_c: bool
    #: Two block pairs whose types over the anchors, b and c differ, if any.
    differing_pair: tuple[tuple[int, int], tuple[int, int]] | None

    @property
    def witnesses_failure(self) -> bool:
        return self.uniform_over_b and self.uniform_over_c and self.differing_pair is not None


def _first_difference(
    params: Sequence[LeveledPoint],
    blocks: Sequence[tuple[LeveledPoint, LeveledPoint]],
) -> tuple[tuple[int, int], tuple[int, int]] | None:
    pairs = list(itertools.combinations(range(len(blocks)), 2))
    reference = None
    for i, j in pairs:
        structure = qf_structure([*params, *blocks[i], *blocks[j]])
        if reference is None:
            reference = structure
        elif structure != reference:
            first = pairs[0]
            return (first[0] + 1, first[1] + 1), (i + 1, j + 1)
    return None


def triviality_failure_witness(n: int, *, cut: Fraction | None = None) -> TrivialityReport:
    """Blocks indiscernible over the anchors with b, and with c, but not with both.

    Positions t_i and values s_i = i both increase; b and c form one extra
    class meeting the anchors below every t_i, and b∧c lies at `cut`
    (default strictly between s_1 and s_2).
    """
    if n < 3:
        raise ModelError("triviality witness", f"needs n ≥ 3, got {n}")
    cut = Fraction(3, 2) if cut is None else Fraction(cut)
    if cut <= 0:
        raise ModelError("triviality witness", "the cut level must be positive")

    anchors = encode_perm(Perm.identity(n))
    blocks = list(zip(anchors.bs, anchors.cs, strict=True))
    base = list(anchors.anchors)
    extra_level = Fraction(-(n + 1))
    b = LeveledPoint({extra_level: 1})
    c = LeveledPoint({extra_level: 1, cut: 1})

    over_b = _first_difference([*base, b], blocks) is None
    over_c = _first_difference([*base, c], blocks) is None
    differing = _first_difference([*base, b, c], blocks)
    logger.info(
        f"Triviality witness n={n}: over b {over_b}, over c {over_c}, differing {differing}"
    )
    return TrivialityReport(
        n=n,
        cut=cut,
        uniform_over_b=over_b,
        uniform_over_c=over_c,
        differing_pair=differing,
    )


__all__ = [
    "MAX_GROWTH_LENGTH",
    "growth_lower_bound",
    "TrivialityReport",
    "triviality_failure_witness",
]
