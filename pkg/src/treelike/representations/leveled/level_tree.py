"""Ranked meet trees: isomorphism types of finite point sets."""

from __future__ import annotations

from typing import Any, final

from collections.abc import Iterator, Sequence
from fractions import Fraction

import attrs
from attrs import field, frozen
from attrs_strict import type_validator

from treelike.errors import ModelError

from .diagram import meet_matrix
from .points import LeveledPoint


@frozen
class LevelLeaf:
    #: Index of the point this leaf stands for.
    label: int = field(validator=type_validator())


def _validate_children(
    instance: Any, attribute: attrs.Attribute[Any], value: tuple[Any, ...]
) -> None:
    for child in value:
        if not isinstance(child, (LevelNode, LevelLeaf)):
            raise TypeError(f"Invalid level tree child: {child!r}")


@frozen
class LevelNode:
    #: Position of the node in the level preorder; smaller is closer to the root.
    rank: int = field(validator=type_validator())
    children: tuple[LevelNode | LevelLeaf, ...] = field(
        converter=tuple, validator=_validate_children
    )


type TreeNode = LevelNode | LevelLeaf


def shape_code(rank: int, child_codes: Sequence[str]) -> str:
    """Unlabelled code of an internal node; leaves are coded as "L"."""
    return f"({rank}:{','.join(sorted(child_codes))})"


LEAF_CODE = "L"


def _code(node: TreeNode) -> str:
    if isinstance(node, LevelLeaf):
        return LEAF_CODE
    return shape_code(node.rank, [_code(child) for child in node.children])


def _min_label(node: TreeNode) -> int:
    if isinstance(node, LevelLeaf):
        return node.label
    return min(_min_label(child) for child in node.children)


@final
@frozen
class LevelTree:
    """A rooted tree with labelled leaves and ranked internal nodes."""

    root: TreeNode

    def nodes(self) -> Iterator[TreeNode]:
        stack: list[TreeNode] = [self.root]
        while stack:
            node = stack.pop()
            yield node
            if isinstance(node, LevelNode):
                stack.extend(reversed(node.children))

    def internal_nodes(self) -> list[LevelNode]:
        return [node for node in self.nodes() if isinstance(node, LevelNode)]

    def labels(self) -> list[int]:
        return [node.label for node in self.nodes() if isinstance(node, LevelLeaf)]

    @property
    def num_leaves(self) -> int:
        return len(self.labels())

    def validate(self) -> None:
        """Raise ModelError unless this is a valid level tree."""
        labels = self.labels()
        if sorted(labels) != list(range(len(labels))):
            raise ModelError("level tree", f"leaf labels {labels} are not 0..k-1")

        def check(node: TreeNode, parent_rank: int | None) -> None:
            if isinstance(node, LevelLeaf):
                return
            if len(node.children) < 2:
                raise ModelError("level tree", "internal node with fewer than 2 children")
            if parent_rank is not None and node.rank <= parent_rank:
                raise ModelError(
                    "level tree", "rank does not increase along a root-to-leaf path"
                )
            for child in node.children:
                check(child, node.rank)

        check(self.root, None)

    def normalized(self) -> LevelTree:
        """Equivalent tree with dense ranks 0..r-1 and children in canonical order."""
        ranks = sorted({node.rank for node in self.internal_nodes()})
        dense = {rank: idx for idx, rank in enumerate(ranks)}

        def rebuild(node: TreeNode) -> TreeNode:
            if isinstance(node, LevelLeaf):
                return node
            children = sorted(
                (rebuild(child) for child in node.children),
                key=lambda child: (_code(child), _min_label(child)),
            )
            return LevelNode(rank=dense[node.rank], children=tuple(children))

        return LevelTree(rebuild(self.root))

    def canonical_code(self) -> bytes:
        """Code of the unlabelled ranked tree; equal iff isomorphic."""
        return _code(self.normalized().root).encode("utf-8")


def extract_level_tree(points: Sequence[LeveledPoint]) -> LevelTree:
    """The ranked meet tree of distinct points; leaf i stands for points[i]."""
    if not points:
        raise ModelError("point list", "at least one point is required")
    matrix = meet_matrix(points)
    levels = sorted({level for row in matrix for level in row if level is not None})
    rank = {level: idx for idx, level in enumerate(levels)}

    def build(indices: list[int]) -> TreeNode:
        if len(indices) == 1:
            return LevelLeaf(label=indices[0])

        pivot = indices[0]
        level = min(matrix[pivot][i] for i in indices[1:])  # pyright: ignore[reportArgumentType]
        assert isinstance(level, Fraction)
        groups: dict[int, list[int]] = {}
        for i in indices:
            groups.setdefault(points[i].letter(level), []).append(i)
        return LevelNode(
            rank=rank[level],
            children=tuple(build(groups[letter]) for letter in sorted(groups)),
        )

    return LevelTree(build(list(range(len(points)))))


def realize(tree: LevelTree) -> list[LeveledPoint]:
    """Points whose meet tree is `tree`; rank r is realized at level r.

    The i-th point realizes the leaf labelled i. Within a node, the j-th child
    takes letter j at the node's level.
    """
    tree.validate()
    ranks = sorted({node.rank for node in tree.internal_nodes()})
    level_of = {rank: Fraction(idx) for idx, rank in enumerate(ranks)}

    words: dict[int, dict[Fraction, int]] = {}

    def walk(node: TreeNode, prefix: dict[Fraction, int]) -> None:
        if isinstance(node, LevelLeaf):
            words[node.label] = prefix
            return
        level = level_of[node.rank]
        for letter, child in enumerate(node.children, start=1):
            walk(child, {**prefix, level: letter})

    walk(tree.root, {})
    return [LeveledPoint(words[label]) for label in range(len(words))]


__all__ = [
    "LevelLeaf",
    "LevelNode",
    "LevelTree",
    "TreeNode",
    "LEAF_CODE",
    "shape_code",
    "extract_level_tree",
    "realize",
]
