"""Encoding permutations as finite sets of leveled points, and decoding them back.

For σ of length n the encoding consists of three anchors a1, a2, a3 meeting
pairwise at level 0, and n blocks {b_i, c_i}. Blocks are ordered by their
meet with the anchors (positions) and by their inner meet (values).
"""

from __future__ import annotations

from typing import final

import itertools
from collections.abc import Sequence
from fractions import Fraction

from attrs import frozen

from treelike.errors import ModelError
from treelike.representations.leveled import (
    LeveledPoint,
    atom_C,
    meet_level,
    meet_matrix,
    qf_structure,
)
from treelike.representations.structure import find_embedding

from .perms import Perm


@final
@frozen
class SigmaStructure:
    sigma: Perm
    anchors: tuple[LeveledPoint, LeveledPoint, LeveledPoint]
    bs: tuple[LeveledPoint, ...]
    cs: tuple[LeveledPoint, ...]

    def __attrs_post_init__(self) -> None:
        failed = [name for name, ok in self.conditions() if not ok]
        if failed:
            raise ModelError("sigma-structure", f"conditions fail: {', '.join(failed)}")

    @property
    def n(self) -> int:
        return len(self.bs)

    @property
    def points(self) -> list[LeveledPoint]:
        return [*self.anchors, *self.bs, *self.cs]

    def named_points(self) -> list[tuple[str, LeveledPoint]]:
        return [
            *((f"a{j}", a) for j, a in enumerate(self.anchors, start=1)),
            *((f"b{i}", b) for i, b in enumerate(self.bs, start=1)),
            *((f"c{i}", c) for i, c in enumerate(self.cs, start=1)),
        ]

    def conditions(self) -> list[tuple[str, bool]]:
        """The four defining conditions, each with its verdict."""
        a, bs, cs = self.anchors, self.bs, self.cs
        blocks = range(self.n)
        no_c_among_anchors = not any(
            atom_C(x, y, z) for x, y, z in itertools.permutations(a, 3)
        )
        anchors_split_blocks = len(bs) == len(cs) and all(
            atom_C(x, bs[i], cs[i]) for x in a for i in blocks
        )
        positions_increase = all(
            meet_level(x, bs[i]) < meet_level(x, bs[j])
            for x in a
            for i, j in itertools.combinations(blocks, 2)
        )
        return [
            ("anchors pairwise unsplit", no_c_among_anchors),
            ("anchors split every block", anchors_split_blocks),
            ("anchor meets follow positions", positions_increase),
            ("inner meets follow values", self._inner_meets_follow_values()),
        ]

    def _inner_meets_follow_values(self) -> bool:
        if len(self.bs) != len(self.cs) or len(self.sigma) != self.n:
            return False
        inner = [meet_level(b, c) for b, c in zip(self.bs, self.cs, strict=True)]
        return all(
            (inner[i] < inner[j]) == self.sigma.precedes_2(i + 1, j + 1)
            for i, j in itertools.permutations(range(self.n), 2)
        )


def encode_perm(sigma: Perm) -> SigmaStructure:
    """Concrete witness: t_i = i - (n+1) orders positions, s_i = σ(i) orders values."""
    n = len(sigma)
    if n == 0:
        raise ModelError("permutation", "cannot encode the empty permutation")

    anchors = (
        LeveledPoint({0: 1}),
        LeveledPoint({0: 2}),
        LeveledPoint({0: 3}),
    )
    bs: list[LeveledPoint] = []
    cs: list[LeveledPoint] = []
    for i in range(1, n + 1):
        t = Fraction(i - (n + 1))
        s = Fraction(sigma(i))
        bs.append(LeveledPoint({t: 1}))
        cs.append(LeveledPoint({t: 1, s: 1}))
    return SigmaStructure(sigma, anchors, tuple(bs), tuple(cs))


def _not_sigma(detail: str) -> ModelError:
    return ModelError("point set", "not a sigma-structure", extra_msg=detail)


def decode_perm(points: Sequence[LeveledPoint]) -> Perm:
    """Recover σ from any point set with the quantifier-free type of an encoding.

    Only equalities and comparisons between meet levels are used.
    """
    matrix = meet_matrix(points)
    everyone = range(len(points))

    def meet(x: int, y: int) -> Fraction:
        level = matrix[x][y]
        assert level is not None
        return level

    anchors = [
        x
        for x in everyone
        if any(
            meet(x, y) == meet(x, z) == meet(y, z)
            for y, z in itertools.combinations([p for p in everyone if p != x], 2)
        )
    ]
    if len(anchors) != 3:
        raise _not_sigma(f"{len(anchors)} points satisfy the anchor formula, expected 3")

    anchor = anchors[0]
    classes: dict[Fraction, list[int]] = {}
    for x in everyone:
        if x not in anchors:
            classes.setdefault(meet(x, anchor), []).append(x)
    if not classes or any(len(members) != 2 for members in classes.values()):
        raise _not_sigma("classes of equal anchor meet are not all pairs")

    # Earlier position = smaller meet with the anchors.
    ordered = [classes[level] for level in sorted(classes)]
    inner = [meet(x, y) for x, y in ordered]
    if len(set(inner)) != len(inner):
        raise _not_sigma("inner meets of the classes are not linearly ordered")
    rank = {level: idx for idx, level in enumerate(sorted(inner), start=1)}
    return Perm(tuple(rank[level] for level in inner))


def encoding_embeds(tau: Perm, sigma: Perm) -> bool:
    """Whether the encoding of σ embeds into the encoding of τ as a {C, V}-structure."""
    source = qf_structure(encode_perm(sigma).points)
    target = qf_structure(encode_perm(tau).points)
    return find_embedding(source, target) is not None


__all__ = ["SigmaStructure", "encode_perm", "decode_perm", "encoding_embeds"]
