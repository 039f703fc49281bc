"""Seeded random generators of valid towers."""

from __future__ import annotations

import random
from collections.abc import Sequence

from treelike.errors import ModelError
from treelike.types import PointId

from .representation import Tower
from .trees import DTree, NodeName


def random_dtree(
    rng: random.Random, classes: Sequence[frozenset[PointId]], prefix: str = ""
) -> DTree:
    """A random D-tree whose leaves host the given classes, in order.

    Grown from a star on the first three leaves by attaching each further
    leaf to an inner node or subdividing an edge.
    """
    if not classes:
        raise ModelError("tree generator", "needs at least one class")
    leaves = [f"{prefix}d{i}" for i in range(len(classes))]
    hosted = dict(zip(leaves, classes, strict=True))
    if len(leaves) == 1:
        return DTree(leaves, [], hosted, {})
    if len(leaves) == 2:
        return DTree(leaves, [(leaves[0], leaves[1])], hosted, {})

    inner: list[NodeName] = [f"{prefix}n0"]
    edges: list[tuple[NodeName, NodeName]] = [(inner[0], leaf) for leaf in leaves[:3]]
    for leaf in leaves[3:]:
        if rng.random() < 0.5:
            edges.append((rng.choice(inner), leaf))
        else:
            u, v = edges.pop(rng.randrange(len(edges)))
            node = f"{prefix}n{len(inner)}"
            inner.append(node)
            edges.extend([(u, node), (node, v), (node, leaf)])

    nodes = [*inner, *leaves]
    neighbours: dict[NodeName, list[NodeName]] = {node: [] for node in nodes}
    for u, v in edges:
        neighbours[u].append(v)
        neighbours[v].append(u)
    special = {node: rng.choice(sorted(neighbours[node])) for node in inner}
    return DTree(nodes, edges, hosted, special)


def _random_partition[T](rng: random.Random, items: Sequence[T]) -> list[list[T]]:
    blocks: list[list[T]] = []
    for item in items:
        slot = rng.randrange(len(blocks) + 1)
        if slot == len(blocks):
            blocks.append([item])
        else:
            blocks[slot].append(item)
    return blocks


def random_tower(
    rng: random.Random,
    num_points: int = 6,
    num_levels: int = 2,
    singleton_leaves: bool = True,
) -> Tower:
    """A valid tower with at most two levels on points p0, p1, ...

    The second level keeps the points of some branches at a random node of
    level 1, and merges each group of branches into one class.
    """
    if num_points < 1:
        raise ModelError("tower generator", f"needs at least one point, got {num_points}")
    if num_levels not in (1, 2):
        raise ModelError("tower generator", f"supports 1 or 2 levels, got {num_levels}")

    points = [f"p{i}" for i in range(num_points)]
    if singleton_leaves:
        classes = [frozenset([p]) for p in points]
    else:
        classes = [frozenset(block) for block in _random_partition(rng, points)]
    rng.shuffle(classes)
    base = random_dtree(rng, classes)
    inner = base.inner_nodes
    if num_levels == 1 or not inner:
        return Tower.build([base])

    center = rng.choice(inner)
    branches = [
        frozenset(p for leaf in branch for p in base.leaves.get(leaf, ()))
        for _, branch in sorted(base.branches(center).items())
    ]
    kept = [branch for branch in branches if rng.random() < 0.75] or [rng.choice(branches)]
    upper_classes = [
        frozenset().union(*group) for group in _random_partition(rng, kept)
    ]
    upper = random_dtree(rng, upper_classes, prefix="u")
    return Tower.build([base, upper])


__all__ = ["random_dtree", "random_tower"]
