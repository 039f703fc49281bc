"""Structural validation of towers and B-towers; violations are reported as data."""

from __future__ import annotations

import itertools
from collections.abc import Sequence

from loguru import logger
from pydantic import BaseModel

from treelike.types import PointId

from .representation import BTower, Tower
from .trees import BTree, DTree, NodeName


class Violation(BaseModel, frozen=True, extra="forbid"):
    #: Level the violation occurs at, None for tower-wide ones.
    level: int | None
    kind: str
    detail: str


class ValidationReport(BaseModel, frozen=True, extra="forbid"):
    violations: tuple[Violation, ...] = ()

    @property
    def ok(self) -> bool:
        return not self.violations

    def kinds(self) -> set[str]:
        return {v.kind for v in self.violations}


def _tree_violations(tree: DTree, j: int) -> list[Violation]:
    found: list[Violation] = []

    def add(kind: str, detail: str) -> None:
        found.append(Violation(level=j, kind=kind, detail=detail))

    if not tree.is_tree():
        add("not a tree", f"{tree.num_nodes} nodes, {len(tree.edges)} edges")
        return found

    for point in tree.duplicate_points:
        add("point hosted twice", f"point {point!r}")

    for leaf, points in tree.leaves.items():
        if not points:
            add("empty leaf", f"leaf {leaf!r}")
        if tree.num_nodes > 1 and tree.degree(leaf) != 1:
            add("leaf degree ≠ 1", f"leaf {leaf!r} has degree {tree.degree(leaf)}")

    inner = tree.inner_nodes
    if inner and len(tree.leaves) < 2:
        add("too few leaves", f"{len(tree.leaves)} leaves next to inner nodes")
    for node in inner:
        if tree.degree(node) < 3:
            add("inner degree < 3", f"node {node!r} has degree {tree.degree(node)}")
        special = tree.special.get(node)
        if special is None:
            add("missing special edge", f"node {node!r}")
        elif special not in tree.neighbors(node):
            add("special edge not incident", f"node {node!r} points to {special!r}")
        elif not tree.special_branch_points(node):
            add("special branch without point", f"node {node!r} toward {special!r}")
    for node in tree.special:
        if node in tree.leaves:
            add("special edge on leaf", f"leaf {node!r}")
    return found


def _presence_violations(
    levels: Sequence[DTree | BTree], exit: dict[PointId, int]
) -> list[Violation]:
    found: list[Violation] = []
    base = levels[0].points
    present_at: dict[PointId, list[int]] = {}
    for j, tree in enumerate(levels, start=1):
        for point in tree.points:
            present_at.setdefault(point, []).append(j)

    for point, present in sorted(present_at.items()):
        if point not in base:
            found.append(Violation(level=present[0], kind="missing from level 1", detail=f"point {point!r}"))
        elif present != list(range(1, len(present) + 1)):
            found.append(
                Violation(level=None, kind="presence not a down-set", detail=f"point {point!r} at {present}")
            )
        if exit.get(point) != present[-1]:
            found.append(
                Violation(
                    level=None,
                    kind="exit mismatch",
                    detail=f"point {point!r}: exit {exit.get(point)}, last present at {present[-1]}",
                )
            )
    for point in sorted(set(exit) - set(present_at)):
        found.append(Violation(level=None, kind="exit mismatch", detail=f"unknown point {point!r}"))
    return found


def _class_of(tree: DTree | BTree, point: PointId) -> NodeName:
    return tree.leaf_of(point) if isinstance(tree, DTree) else tree.vertex_of(point)


def _refinement_violations(levels: Sequence[DTree | BTree]) -> list[Violation]:
    found: list[Violation] = []
    for (i, lower), (j, upper) in itertools.combinations(enumerate(levels, start=1), 2):
        shared = sorted(lower.points & upper.points)
        for x, y in itertools.combinations(shared, 2):
            if _class_of(lower, x) == _class_of(lower, y) and _class_of(upper, x) != _class_of(upper, y):
                found.append(
                    Violation(
                        level=j,
                        kind="refinement",
                        detail=f"{x!r} and {y!r} share a class at level {i} but not at {j}",
                    )
                )
    return found


def _coherent_at(
    lower: DTree, upper: DTree, sides: Sequence[frozenset[NodeName]]
) -> bool:
    for side in sides:
        classes = {
            upper.leaf_of(p)
            for leaf in side
            for p in lower.leaves.get(leaf, ())
            if upper.hosts(p)
        }
        if len(classes) > 1:
            return False
    return True


def _cone_coherent(lower: DTree, upper: DTree) -> bool:
    """Some node or edge of `lower` splits the level above into unions of its branches."""
    if len(upper.leaves) <= 1:
        return True
    if any(_coherent_at(lower, upper, list(lower.branches(v).values())) for v in lower.inner_nodes):
        return True
    return any(_coherent_at(lower, upper, lower.edge_sides(u, v)) for u, v in lower.edges)


def validate_tower(tower: Tower) -> ValidationReport:
    violations: list[Violation] = []
    for j, tree in enumerate(tower.levels, start=1):
        violations.extend(_tree_violations(tree, j))
    if violations:
        # The remaining checks assume every level is a well-formed tree.
        return ValidationReport(violations=tuple(violations))

    violations.extend(_presence_violations(tower.levels, tower.exit))
    violations.extend(_refinement_violations(tower.levels))
    for j, (lower, upper) in enumerate(itertools.pairwise(tower.levels), start=1):
        if not _cone_coherent(lower, upper):
            violations.append(
                Violation(level=j + 1, kind="cone coherence", detail=f"no center at level {j}")
            )

    logger.debug(f"Validated tower with {tower.num_levels} levels: {len(violations)} violations")
    return ValidationReport(violations=tuple(violations))


def validate_btower(btower: BTower) -> ValidationReport:
    violations: list[Violation] = []
    for j, tree in enumerate(btower.levels, start=1):
        if not tree.is_tree():
            violations.append(Violation(level=j, kind="not a tree", detail=f"{tree.num_nodes} nodes"))
            continue
        for point in tree.duplicate_points:
            violations.append(Violation(level=j, kind="point hosted twice", detail=f"point {point!r}"))
        for median in tree.unoccupied_medians(tree.hosted):
            violations.append(
                Violation(level=j, kind="median closure", detail=f"vertex {median!r} is unoccupied")
            )
    if any(v.kind == "not a tree" for v in violations):
        return ValidationReport(violations=tuple(violations))

    violations.extend(_presence_violations(btower.levels, btower.exit))
    violations.extend(_refinement_violations(btower.levels))
    logger.debug(f"Validated B-tower with {btower.num_levels} levels: {len(violations)} violations")
    return ValidationReport(violations=tuple(violations))


__all__ = ["Violation", "ValidationReport", "validate_tower", "validate_btower"]
