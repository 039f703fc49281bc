"""Bounded searches over towers: a non-homogeneity witness and homogenization checks.

The witness search ranges over "guarded" towers on five labelled points
u, w, x, y, z. Every inner node gets its own guard leaf as special branch,
so no L-atom holds among the labelled points and L1 sees only S-atoms and
their exit-level variants.

Homogenization checks compare subsets through their canonical completions,
matching L1 types by witness levels and exits rather than by materializing
the wide relations.
"""

from __future__ import annotations

from typing import final

import itertools
import time
from collections import defaultdict
from collections.abc import Iterator, Mapping, Sequence

from attrs import field, frozen
from loguru import logger

from treelike.errors import ModelError
from treelike.representations.structure import (
    FinStructure,
    canonical_code,
    iter_isomorphisms,
)
from treelike.types import PointId

from .atoms import L1_SIGNATURE, L2_SIGNATURE, reduct, witnessed_atoms
from .completion import canonical_completion, complete
from .representation import Tower
from .trees import DTree, NodeName

LABELLED: tuple[PointId, ...] = ("u", "w", "x", "y", "z")


def _guarded_tree(
    groups: Sequence[tuple[NodeName, Sequence[frozenset[PointId]], PointId]],
    spine: Sequence[tuple[NodeName, NodeName]],
) -> DTree:
    """Inner nodes with their leaf classes and guard point, joined along `spine`."""
    nodes: list[NodeName] = []
    edges: list[tuple[NodeName, NodeName]] = list(spine)
    leaves: dict[NodeName, frozenset[PointId]] = {}
    special: dict[NodeName, NodeName] = {}
    for node, classes, guard in groups:
        nodes.append(node)
        for cls in [*classes, frozenset([guard])]:
            leaf = "d_" + "_".join(sorted(cls))
            leaves[leaf] = cls
            edges.append((node, leaf))
        special[node] = f"d_{guard}"
    return DTree([*nodes, *leaves], edges, leaves, special)


def _singletons(points: Sequence[PointId]) -> list[frozenset[PointId]]:
    return [frozenset([p]) for p in points]


def _single_level_candidates() -> Iterator[Tower]:
    yield Tower.build([_guarded_tree([("n1", _singletons(LABELLED), "g1")], [])])
    for pair in itertools.combinations(LABELLED, 2):
        rest = [p for p in LABELLED if p not in pair]
        yield Tower.build(
            [_guarded_tree([("n1", _singletons(pair), "g1"), ("n2", _singletons(rest), "g2")], [("n1", "n2")])]
        )
    for pair in itertools.combinations(LABELLED, 2):
        rest = [p for p in LABELLED if p not in pair]
        for middle in rest:
            last = [p for p in rest if p != middle]
            groups = [
                ("n1", _singletons(pair), "g1"),
                ("n2", _singletons([middle]), "g2"),
                ("n3", _singletons(last), "g3"),
            ]
            yield Tower.build([_guarded_tree(groups, [("n1", "n2"), ("n2", "n3")])])


def _two_level_candidates() -> Iterator[Tower]:
    """Level 1 splits off a pair that merges into one class at level 2."""
    for merged in itertools.combinations(LABELLED, 2):
        rest = [p for p in LABELLED if p not in merged]
        lower = DTree(
            ["v", "m", *(f"d_{p}" for p in [*LABELLED, "g1", "g2", "gm"])],
            [
                ("v", "m"),
                *(("v", f"d_{p}") for p in [*rest, "g1", "g2"]),
                *(("m", f"d_{p}") for p in [*merged, "gm"]),
            ],
            {f"d_{p}": [p] for p in [*LABELLED, "g1", "g2", "gm"]},
            {"v": "d_g1", "m": "d_gm"},
        )
        classes = [frozenset(merged), *_singletons(rest)]
        for partner in classes[1:]:
            near = [classes[0], partner]
            far = [cls for cls in classes[1:] if cls != partner]
            upper = _guarded_tree([("v1", near, "g1"), ("v2", far, "g2")], [("v1", "v2")])
            yield Tower.build([lower, upper])


def guarded_candidates() -> list[Tower]:
    return [*_two_level_candidates(), *_single_level_candidates()]


@frozen
class L1Profile:
    """Witness levels and exits over a point set, which fix its L1 type."""

    points: tuple[PointId, ...]
    l_levels: dict[tuple[PointId, ...], int]
    s_levels: dict[tuple[PointId, ...], int]
    exit: dict[PointId, int]

    @classmethod
    def of(cls, tower: Tower, points: Sequence[PointId]) -> L1Profile:
        points = tuple(points)
        return cls(
            points,
            witnessed_atoms(tower, points, 3),
            witnessed_atoms(tower, points, 4),
            {p: tower.exit[p] for p in points},
        )

    def invariant(self, point: PointId) -> tuple[int, int, int, int]:
        """Counts every L1-isomorphism preserves."""
        return (
            sum(1 for tup in self.l_levels if tup[0] == point),
            sum(1 for tup in self.l_levels if point in tup),
            sum(1 for tup in self.s_levels if point in tup),
            sum(1 for level in self.l_levels.values() if self.exit[point] < level),
        )


def _level_map(
    left: Mapping[tuple[PointId, ...], int],
    right: Mapping[tuple[PointId, ...], int],
    mapping: Mapping[PointId, PointId],
) -> dict[int, int] | None:
    if len(left) != len(right):
        return None
    levels: dict[int, int] = {}
    for tup, level in left.items():
        image = right.get(tuple(mapping[p] for p in tup))
        if image is None or levels.setdefault(level, image) != image:
            return None
    return levels


def preserves_l1(src: L1Profile, dst: L1Profile, mapping: Mapping[PointId, PointId]) -> bool:
    """Whether the bijection `mapping` is an isomorphism of the two L1 types.

    R asks for a one-to-one map of L witness levels, Q ties S witness levels
    to it, and L' and S' compare exits against both.
    """
    l_map = _level_map(src.l_levels, dst.l_levels, mapping)
    if l_map is None or len(set(l_map.values())) != len(l_map):
        return False
    if len(src.s_levels) != len(dst.s_levels):
        return False

    l_images = set(l_map.values())
    compared = set(l_map.items())
    for tup, level in src.s_levels.items():
        image = dst.s_levels.get(tuple(mapping[p] for p in tup))
        if image is None:
            return False
        if (l_map[level] != image) if level in l_map else (image in l_images):
            return False
        compared.add((level, image))

    return all(
        (src.exit[p] < level) == (dst.exit[mapping[p]] < image)
        for level, image in compared
        for p in src.points
    )


def find_l1_extension(
    src: L1Profile, dst: L1Profile, fixed: Mapping[PointId, PointId]
) -> dict[PointId, PointId] | None:
    """An L1-isomorphism between the profiled point sets that extends `fixed`, if any."""
    if len(src.points) != len(dst.points):
        return None
    taken = set(fixed.values())
    free_src: dict[tuple[int, ...], list[PointId]] = defaultdict(list)
    free_dst: dict[tuple[int, ...], list[PointId]] = defaultdict(list)
    for p in src.points:
        if p not in fixed:
            free_src[src.invariant(p)].append(p)
    for p in dst.points:
        if p not in taken:
            free_dst[dst.invariant(p)].append(p)
    if {k: len(v) for k, v in free_src.items()} != {k: len(v) for k, v in free_dst.items()}:
        return None

    keys = sorted(free_src)
    for images in itertools.product(*(itertools.permutations(free_dst[k]) for k in keys)):
        mapping = dict(fixed)
        for key, image in zip(keys, images):
            mapping.update(zip(free_src[key], image))
        if preserves_l1(src, dst, mapping):
            return mapping
    return None


@final
@frozen(eq=False)
class NonhomogeneityWitness:
    """An L1-isomorphism between point sets of two towers that is not an L2-isomorphism."""

    tower1: Tower
    subset1: tuple[PointId, ...]
    tower2: Tower
    subset2: tuple[PointId, ...]
    bijection: dict[PointId, PointId]
    #: A T-tuple over subset1 whose truth value the bijection does not preserve.
    distinguishing: tuple[PointId, ...]

    _completions: dict[int, list[PointId]] = field(factory=dict, init=False, repr=False)

    def completions(self) -> tuple[list[PointId], list[PointId]]:
        if not self._completions:
            self._completions[1] = complete(self.tower1, self.subset1)
            self._completions[2] = complete(self.tower2, self.subset2)
        return self._completions[1], self._completions[2]

    def extension(self) -> dict[PointId, PointId] | None:
        """An L1-isomorphism of the completions extending the bijection, if any."""
        ext1, ext2 = self.completions()
        return find_l1_extension(
            L1Profile.of(self.tower1, ext1), L1Profile.of(self.tower2, ext2), self.bijection
        )


def _differing_tuple(
    left: FinStructure, right: FinStructure, mapping: Mapping[PointId, PointId], symbol: str
) -> tuple[PointId, ...] | None:
    inverse = {image: element for element, image in mapping.items()}
    mapped = {tuple(mapping[p] for p in tup) for tup in left.relations[symbol]}
    differing = {
        *(tup for tup in left.relations[symbol] if tuple(mapping[p] for p in tup) not in right.relations[symbol]),
        *(tuple(inverse[p] for p in tup) for tup in right.relations[symbol] if tup not in mapped),
    }
    return min(differing) if differing else None


def nonhomogeneity_witness(candidates: Sequence[Tower] | None = None) -> NonhomogeneityWitness:
    """First pair of candidate towers whose labelled points are L1- but not L2-isomorphic."""
    start = time.perf_counter()
    candidates = guarded_candidates() if candidates is None else list(candidates)

    groups: dict[bytes, list[int]] = defaultdict(list)
    l1: list[FinStructure] = []
    l2: list[FinStructure] = []
    for idx, tower in enumerate(candidates):
        subset = LABELLED if set(LABELLED) <= set(tower.points) else tower.points
        l1.append(reduct(tower, subset, L1_SIGNATURE))
        l2.append(reduct(tower, subset, L2_SIGNATURE))
        groups[canonical_code(l1[-1])].append(idx)
    logger.debug(f"{len(candidates)} candidate towers in {len(groups)} L1 classes")

    for members in groups.values():
        for i, j in itertools.combinations(members, 2):
            for bijection in iter_isomorphisms(l1[i], l1[j]):
                differing = _differing_tuple(l2[i], l2[j], bijection, "T")
                if differing is None:
                    continue
                logger.info(
                    f"Found a non-homogeneity witness between candidates {i} and {j} "
                    f"in {time.perf_counter() - start:.2f}s"
                )
                return NonhomogeneityWitness(
                    candidates[i],
                    tuple(map(str, l1[i].universe)),
                    candidates[j],
                    tuple(map(str, l1[j].universe)),
                    {str(k): str(v) for k, v in bijection.items()},
                    tuple(map(str, differing)),
                )
    raise ModelError("search", "no witness in bounded search space")


@frozen
class HomogenizationFailure:
    subset1: tuple[PointId, ...]
    subset2: tuple[PointId, ...]
    bijection: dict[PointId, PointId]


class _SubsetIndex:
    """L2 codes of all small subsets of a tower, with memoized completion profiles."""

    def __init__(self, tower: Tower, max_size: int) -> None:
        self.tower = tower
        self.by_code: dict[bytes, list[tuple[PointId, ...]]] = defaultdict(list)
        self.structures: dict[tuple[PointId, ...], FinStructure] = {}
        self._completed: dict[tuple[PointId, ...], L1Profile] = {}
        for size in range(1, max_size + 1):
            for subset in itertools.combinations(tower.points, size):
                structure = reduct(tower, subset, L2_SIGNATURE)
                self.structures[subset] = structure
                self.by_code[canonical_code(structure)].append(subset)

    def completed(self, subset: tuple[PointId, ...]) -> L1Profile:
        if subset not in self._completed:
            completion = canonical_completion(self.tower, subset)
            self._completed[subset] = L1Profile.of(completion.tower, completion.points)
        return self._completed[subset]


def homogenization_failures(
    tower1: Tower, tower2: Tower, max_size: int = 5
) -> list[HomogenizationFailure]:
    """L2-isomorphisms between small subsets that no L1-isomorphism of completions extends."""
    if max_size < 1:
        raise ModelError("homogenization check", f"max_size must be positive, got {max_size}")
    index1 = _SubsetIndex(tower1, max_size)
    index2 = _SubsetIndex(tower2, max_size)

    failures: list[HomogenizationFailure] = []
    checked = 0
    for code, subsets1 in index1.by_code.items():
        for subset1, subset2 in itertools.product(subsets1, index2.by_code.get(code, [])):
            for bijection in iter_isomorphisms(index1.structures[subset1], index2.structures[subset2]):
                checked += 1
                fixed = {str(k): str(v) for k, v in bijection.items()}
                extension = find_l1_extension(
                    index1.completed(subset1), index2.completed(subset2), fixed
                )
                if extension is None:
                    failures.append(HomogenizationFailure(subset1, subset2, fixed))
    logger.debug(f"Checked {checked} L2-isomorphisms, {len(failures)} without extension")
    return failures


__all__ = [
    "LABELLED",
    "guarded_candidates",
    "L1Profile",
    "preserves_l1",
    "find_l1_extension",
    "NonhomogeneityWitness",
    "nonhomogeneity_witness",
    "HomogenizationFailure",
    "homogenization_failures",
]
