"""JSON exporting and loading of points and level trees."""

from __future__ import annotations

from typing import Any

from fractions import Fraction

from treelike.errors import ModelError

from .level_tree import LevelLeaf, LevelNode, LevelTree, TreeNode
from .points import LeveledPoint


def dump_rational(q: Fraction) -> str:
    return f"{q.numerator}/{q.denominator}"


def load_rational(text: Any) -> Fraction:
    if isinstance(text, bool) or not isinstance(text, (str, int)):
        raise ModelError("rational", f"expected a 'p/q' string, got {text!r}")
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as e:
        raise ModelError("rational", f"cannot parse {text!r}") from e


def point_to_json(point: LeveledPoint, name: str | None = None) -> dict[str, Any]:
    data: dict[str, Any] = {"word": [[dump_rational(q), letter] for q, letter in point.word]}
    if name is not None:
        data["name"] = name
    return data


def point_from_json(data: Any) -> LeveledPoint:
    if not isinstance(data, dict) or "word" not in data:
        raise ModelError("point", "expected an object with a 'word' field")
    try:
        return LeveledPoint(
            [(load_rational(q), letter) for q, letter in data["word"]]
        )
    except (TypeError, ValueError) as e:
        raise ModelError("point", str(e)) from e


def named_points_from_json(data: Any) -> list[tuple[str, LeveledPoint]]:
    """Points from a JSON list, or an object with a "points" list; names default to p0, p1, ..."""
    if isinstance(data, dict) and "points" in data:
        data = data["points"]
    if not isinstance(data, list):
        raise ModelError("point list", "expected a JSON list of points")
    return [
        (str(entry.get("name", f"p{idx}")), point_from_json(entry))
        for idx, entry in enumerate(data)
    ]


def points_from_json(data: Any) -> list[LeveledPoint]:
    return [point for _, point in named_points_from_json(data)]


def tree_to_json(tree: LevelTree) -> dict[str, Any]:
    def dump(node: TreeNode) -> dict[str, Any]:
        if isinstance(node, LevelLeaf):
            return {"leaf": node.label}
        return {"rank": node.rank, "children": [dump(child) for child in node.children]}

    return dump(tree.root)


def tree_from_json(data: Any) -> LevelTree:
    def load(node: Any) -> TreeNode:
        if not isinstance(node, dict):
            raise ModelError("level tree", f"expected a node object, got {node!r}")
        if "leaf" in node:
            return LevelLeaf(label=node["leaf"])
        if "rank" not in node or "children" not in node:
            raise ModelError("level tree", "internal nodes need 'rank' and 'children'")
        return LevelNode(rank=node["rank"], children=tuple(load(c) for c in node["children"]))

    tree = LevelTree(load(data))
    tree.validate()
    return tree


__all__ = [
    "dump_rational",
    "load_rational",
    "point_to_json",
    "point_from_json",
    "named_points_from_json",
    "points_from_json",
    "tree_to_json",
    "tree_from_json",
]
