"""Induced sub-towers and the completions used for homogenization."""

from __future__ import annotations

import itertools
from collections.abc import Iterable, Sequence

from attrs import frozen
from loguru import logger

from treelike.errors import ModelError
from treelike.types import PointId

from .atoms import witnessed_atoms
from .representation import BTower, Tower
from .trees import DTree, NodeName


def induced_tower(tower: Tower, subset: Iterable[PointId]) -> Tower:
    """The sub-tower spanned by `subset`: one induced tree per level the subset reaches."""
    chosen = sorted(set(subset))
    if not chosen:
        raise ModelError("point subset", "subset is empty")
    tower.check_points(*chosen)

    levels: list[DTree] = []
    for tree in tower.levels:
        sub = tree.induced(chosen)
        if sub is None:
            break
        levels.append(sub)
    return Tower.build(levels, {p: tower.exit[p] for p in chosen})


def _missing_special_point(tree: DTree, chosen: set[PointId]) -> tuple[str, PointId] | None:
    """First induced node lacking a chosen point on its special side, with the point to adopt."""
    occupied = sorted({tree.leaf_of(p) for p in chosen if tree.hosts(p)})
    centers = sorted({tree.median(u, v, w) for u, v, w in itertools.combinations(occupied, 3)})
    for center in centers:
        candidates = tree.special_branch_points(center)
        if chosen.isdisjoint(candidates):
            if not candidates:
                raise ModelError(
                    "tower",
                    "ambient tower not in class D",
                    extra_msg=f"Node {center!r} has no point in its special branch",
                )
            return center, candidates[0]
    return None


def complete(tower: Tower, subset: Iterable[PointId]) -> list[PointId]:
    """Close `subset` so every induced node has a chosen point on its special side.

    Levels are swept from 1 upward, adopting the lowest-id point of the ambient
    special branch; the sweep repeats until nothing is added.
    """
    chosen = set(subset)
    if not chosen:
        raise ModelError("point subset", "subset is empty")
    tower.check_points(*chosen)

    changed = True
    while changed:
        changed = False
        for j, tree in enumerate(tower.levels, start=1):
            while (missing := _missing_special_point(tree, chosen)) is not None:
                center, point = missing
                logger.trace(f"Level {j}: adopting {point!r} for node {center!r}")
                chosen.add(point)
                changed = True
    return sorted(chosen)


@frozen
class Completion:
    """A tower rebuilt around `subset`, with the fresh points it had to add."""

    tower: Tower
    subset: tuple[PointId, ...]
    fresh: tuple[PointId, ...]

    @property
    def points(self) -> tuple[PointId, ...]:
        return (*self.subset, *self.fresh)


class _LevelDraft:
    """An induced level that fresh leaves can still be attached to."""

    def __init__(self, tree: DTree, revealed: set[NodeName]) -> None:
        self.nodes: list[NodeName] = list(tree.nodes)
        self.edges: list[tuple[NodeName, NodeName]] = list(tree.edges)
        self.leaves: dict[NodeName, frozenset[PointId]] = dict(tree.leaves)
        self.special = {node: leaf for node, leaf in tree.special.items() if node in revealed}

    def attach(self, node: NodeName, point: PointId, *, special: bool) -> None:
        leaf = f"d_{point}"
        self.nodes.append(leaf)
        self.edges.append((node, leaf))
        self.leaves[leaf] = frozenset([point])
        if special:
            self.special[node] = leaf

    def freeze(self) -> DTree:
        return DTree(self.nodes, self.edges, self.leaves, self.special)


def _base_level(groups: Sequence[Sequence[PointId]]) -> tuple[DTree, list[PointId]]:
    """A star with one leaf per group and a fresh special leaf; no center below three leaves."""
    leaves = {f"d_{i}": group for i, group in enumerate(groups)}
    if len(leaves) == 1:
        return DTree(list(leaves), [], leaves, {}), []
    if len(leaves) == 2:
        return DTree(list(leaves), [("d_0", "d_1")], leaves, {}), []
    leaves["d_+0"] = ["+0"]
    edges = [("base", leaf) for leaf in leaves]
    return DTree(["base", *leaves], edges, leaves, {"base": "d_+0"}), ["+0"]


def canonical_completion(tower: Tower, subset: Iterable[PointId]) -> Completion:
    """Rebuild the tower around `subset` from what its L2 type determines.

    Only levels witnessing an L or S tuple over the subset are kept, as induced
    trees. A node keeps its special edge where an L tuple witnessed at that
    level reveals it; any other node gets a fresh point on a new special leaf,
    and the point stays off the special side at the coherence node of every
    lower kept level. Subset points missing from the lowest kept level sit on
    an extra base star. Subsets with isomorphic L2 types get completions whose
    L1 types are isomorphic over that isomorphism.
    """
    chosen = sorted(set(subset))
    if not chosen:
        raise ModelError("point subset", "subset is empty")
    tower.check_points(*chosen)

    l_atoms = witnessed_atoms(tower, chosen, 3)
    s_atoms = witnessed_atoms(tower, chosen, 4)
    visible = sorted({*l_atoms.values(), *s_atoms.values()})

    trees: list[DTree] = []
    drafts: list[_LevelDraft] = []
    fresh_by_rank: list[list[PointId]] = []
    for j in visible:
        tree = tower.level(j).induced(chosen)
        assert tree is not None
        revealed = {tree.ram(tup[0], tup[1], tup[2]) for tup, level in l_atoms.items() if level == j}
        draft = _LevelDraft(tree, revealed)
        fresh: list[PointId] = []
        for node in tree.inner_nodes:
            if node not in draft.special:
                fresh.append(f"+{j}.{node}")
                draft.attach(node, fresh[-1], special=True)
        trees.append(tree)
        drafts.append(draft)
        fresh_by_rank.append(fresh)

    for rank in range(len(trees) - 1):
        # any three upper classes meet at the coherence node
        upper = [min(points) for points in trees[rank + 1].leaves.values()][:3]
        center = trees[rank].median(*(trees[rank].leaf_of(p) for p in upper))
        for point in itertools.chain.from_iterable(fresh_by_rank[rank + 1 :]):
            drafts[rank].attach(center, point, special=False)

    levels = [draft.freeze() for draft in drafts]
    added = list(itertools.chain.from_iterable(fresh_by_rank))
    loose = [p for p in chosen if not trees or not trees[0].hosts(p)]
    if loose:
        groups = [sorted(points) for points in trees[0].leaves.values()] if trees else []
        groups += [[p] for p in [*added, *loose]]
        base, base_fresh = _base_level(groups)
        levels.insert(0, base)
        added += base_fresh

    logger.trace(
        f"Completion of {chosen}: {len(levels)} levels from visible levels {visible}, fresh {added}"
    )
    return Completion(Tower.build(levels), tuple(chosen), tuple(added))


def positive_type_complete(btower: BTower, subset: Iterable[PointId]) -> list[PointId]:
    """Close `subset` under medians of occupied vertices, level by level."""
    chosen = set(subset)
    btower.check_points(*chosen)

    changed = True
    while changed:
        changed = False
        for j, tree in enumerate(btower.levels, start=1):
            while True:
                occupied = {tree.vertex_of(p) for p in chosen if tree.hosts(p)}
                missing = tree.unoccupied_medians(occupied)
                if not missing:
                    break
                hosted = sorted(tree.hosted.get(missing[0], ()))
                if not hosted:
                    raise ModelError(
                        "B-tower",
                        "ambient B-tower lacks positive type",
                        extra_msg=f"Vertex {missing[0]!r} at level {j} hosts no point",
                    )
                logger.trace(f"Level {j}: adopting {hosted[0]!r} at vertex {missing[0]!r}")
                chosen.add(hosted[0])
                changed = True
    return sorted(chosen)


__all__ = ["induced_tower", "complete", "Completion", "canonical_completion", "positive_type_complete"]
