"""JSON exporting and loading of towers and B-towers."""

from __future__ import annotations

from typing import Any

import json
from importlib import resources

from treelike.errors import ModelError

from ..representation import BTower, Tower
from ..trees import BTree, DTree

#: Reference towers shipped with the package.
REFERENCE_TOWERS = ("Tstar", "Tdiamond")


def _edges_to_json(tree: DTree | BTree) -> list[list[str]]:
    return sorted(sorted(edge) for edge in tree.edges)


def dtree_to_json(tree: DTree) -> dict[str, Any]:
    return {
        "nodes": list(tree.nodes),
        "edges": _edges_to_json(tree),
        "leaves": {leaf: sorted(points) for leaf, points in tree.leaves.items()},
        "special": dict(tree.special),
    }


def btree_to_json(tree: BTree) -> dict[str, Any]:
    return {
        "nodes": list(tree.nodes),
        "edges": _edges_to_json(tree),
        "hosts": {vertex: sorted(points) for vertex, points in tree.hosted.items()},
    }


def tower_to_json(tower: Tower) -> dict[str, Any]:
    return {
        "levels": [dtree_to_json(tree) for tree in tower.levels],
        "exit": dict(sorted(tower.exit.items())),
    }


def btower_to_json(btower: BTower) -> dict[str, Any]:
    return {
        "levels": [btree_to_json(tree) for tree in btower.levels],
        "exit": dict(sorted(btower.exit.items())),
    }


def dump_tower(tower: Tower | BTower) -> str:
    data = tower_to_json(tower) if isinstance(tower, Tower) else btower_to_json(tower)
    return json.dumps(data, sort_keys=True, indent=2)


def _levels(data: Any, kind: str) -> list[dict[str, Any]]:
    if not isinstance(data, dict) or not isinstance(data.get("levels"), list) or not data["levels"]:
        raise ModelError(kind, "expected an object with a nonempty 'levels' list")
    if "exit" in data and not isinstance(data["exit"], dict):
        raise ModelError(kind, "'exit' must be an object")
    return data["levels"]


def _edges(level: dict[str, Any]) -> list[tuple[str, str]]:
    return [(str(u), str(v)) for u, v in level.get("edges", [])]


def tower_from_json(data: Any) -> Tower:
    try:
        levels = [
            DTree(
                [str(n) for n in level["nodes"]],
                _edges(level),
                {str(leaf): [str(p) for p in points] for leaf, points in level.get("leaves", {}).items()},
                {str(n): str(s) for n, s in level.get("special", {}).items()},
            )
            for level in _levels(data, "tower")
        ]
        return Tower.build(levels, data.get("exit"))
    except (KeyError, TypeError, ValueError) as e:
        raise ModelError("tower", "malformed tower JSON", extra_msg=str(e)) from e


def btower_from_json(data: Any) -> BTower:
    try:
        levels = [
            BTree(
                [str(n) for n in level["nodes"]],
                _edges(level),
                {str(v): [str(p) for p in points] for v, points in level.get("hosts", {}).items()},
            )
            for level in _levels(data, "B-tower")
        ]
        return BTower.build(levels, data.get("exit"))
    except (KeyError, TypeError, ValueError) as e:
        raise ModelError("B-tower", "malformed B-tower JSON", extra_msg=str(e)) from e


def _parse(text: str, kind: str) -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise ModelError(kind, "not valid JSON", extra_msg=str(e)) from e


def load_tower(text: str) -> Tower:
    return tower_from_json(_parse(text, "tower"))


def load_btower(text: str) -> BTower:
    return btower_from_json(_parse(text, "B-tower"))


def reference_tower(name: str) -> Tower:
    if name not in REFERENCE_TOWERS:
        raise ModelError(
            "reference tower", f"unknown name {name!r}", extra_msg=f"Known: {', '.join(REFERENCE_TOWERS)}"
        )
    text = resources.files("treelike.representations.towers").joinpath("data", f"{name}.json").read_text()
    return load_tower(text)


__all__ = [
    "REFERENCE_TOWERS",
    "dtree_to_json",
    "btree_to_json",
    "tower_to_json",
    "btower_to_json",
    "dump_tower",
    "tower_from_json",
    "btower_from_json",
    "load_tower",
    "load_btower",
    "reference_tower",
]
