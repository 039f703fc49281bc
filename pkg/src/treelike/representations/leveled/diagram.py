"""Quantifier-free diagrams of finite point sets."""

from __future__ import annotations

import itertools
from collections.abc import Sequence
from fractions import Fraction

from treelike.errors import ModelError
from treelike.representations.structure import FinStructure, Signature
from treelike.utils import find_duplicate

from .points import LeveledPoint, meet_level

CV_SIGNATURE = Signature.of(("C", 3), ("V", 4))

type MeetMatrix = tuple[tuple[Fraction | None, ...], ...]
type MeetProfile = tuple[tuple[int, ...], ...]


def _require_distinct(points: Sequence[LeveledPoint], object_type: str) -> None:
    duplicate = find_duplicate(points)
    if duplicate is not None:
        raise ModelError(object_type, f"duplicate point {duplicate}")


def meet_matrix(points: Sequence[LeveledPoint]) -> MeetMatrix:
    """Pairwise meet levels, None on the diagonal."""
    _require_distinct(points, "point list")
    n = len(points)
    rows: list[list[Fraction | None]] = [[None] * n for _ in range(n)]
    for i, j in itertools.combinations(range(n), 2):
        rows[i][j] = rows[j][i] = meet_level(points[i], points[j])
    return tuple(tuple(row) for row in rows)


def meet_profile(points: Sequence[LeveledPoint]) -> MeetProfile:
    """Meet matrix with levels replaced by their dense rank, -1 on the diagonal.

    Two point lists have the same profile iff index-wise they satisfy the
    same C- and V-atoms.
    """
    matrix = meet_matrix(points)
    levels = sorted({level for row in matrix for level in row if level is not None})
    rank = {level: idx for idx, level in enumerate(levels)}
    return tuple(
        tuple(-1 if level is None else rank[level] for level in row) for row in matrix
    )


def is_partial_isomorphism(
    dom: Sequence[LeveledPoint], img: Sequence[LeveledPoint]
) -> bool:
    """Whether dom[i] ↦ img[i] preserves C, V and their negations."""
    if len(dom) != len(img):
        return False
    if find_duplicate(dom) is not None or find_duplicate(img) is not None:
        return False
    return meet_profile(dom) == meet_profile(img)


def qf_structure(points: Sequence[LeveledPoint]) -> FinStructure:
    """The {C, V}-structure on indices 0..n-1 induced by the points."""
    matrix = meet_matrix(points)
    n = len(points)
    indices = range(n)

    c_tuples: set[tuple[int, ...]] = set()
    for a, b, c in itertools.product(indices, repeat=3):
        if b == c:
            if a != b:
                c_tuples.add((a, b, c))
        elif a not in (b, c):
            m_ab, m_bc = matrix[a][b], matrix[b][c]
            assert m_ab is not None and m_bc is not None
            if m_ab < m_bc:
                c_tuples.add((a, b, c))

    pairs = [(a, b) for a, b in itertools.product(indices, repeat=2) if a != b]
    v_tuples = {
        (a, b, c, d)
        for (a, b), (c, d) in itertools.product(pairs, repeat=2)
        if matrix[a][b] <= matrix[c][d]  # pyright: ignore[reportOperatorIssue]
    }

    return FinStructure.trusted(
        CV_SIGNATURE,
        tuple(indices),
        {"C": frozenset(c_tuples), "V": frozenset(v_tuples)},
    )


__all__ = [
    "CV_SIGNATURE",
    "MeetProfile",
    "meet_matrix",
    "meet_profile",
    "is_partial_isomorphism",
    "qf_structure",
]
