"""Structure and tower assertion helpers."""

from __future__ import annotations

from collections.abc import Iterable, Mapping, Sequence

from treelike.representations.leveled import LeveledPoint, qf_structure
from treelike.representations.structure import FinStructure, is_embedding
from treelike.representations.towers import DTree, Tower
from treelike.types import Element, PointId


def assert_structures_match(s1: FinStructure, s2: FinStructure) -> None:
    """Equal signatures, universes (as sets) and relations."""
    __tracebackhide__ = True

    assert s1.signature == s2.signature, (
        f"Mismatching signature: Expected {s2.signature}, got {s1.signature}"
    )
    assert set(s1.universe) == set(s2.universe), (
        f"Mismatching universe: Expected {sorted(map(str, s2.universe))}, got {sorted(map(str, s1.universe))}"
    )
    for name in s1.signature.names:
        extra = s1.relations[name] - s2.relations[name]
        missing = s2.relations[name] - s1.relations[name]
        assert not extra, f"Unexpected {name}-tuples in first structure: {sorted(extra)}"
        assert not missing, f"Missing {name}-tuples in first structure: {sorted(missing)}"


def assert_isomorphism(
    mapping: Mapping[Element, Element], s1: FinStructure, s2: FinStructure
) -> None:
    __tracebackhide__ = True

    assert set(mapping) == set(s1.universe), f"Map {mapping} is not total on the source"
    assert set(mapping.values()) == set(s2.universe), f"Map {mapping} is not onto the target"
    assert is_embedding(mapping, s1, s2), f"Map {mapping} does not preserve all atoms"


def assert_partial_isomorphism(
    dom: Sequence[LeveledPoint], img: Sequence[LeveledPoint]
) -> None:
    """dom[i] ↦ img[i] preserves every C- and V-atom."""
    __tracebackhide__ = True

    assert len(dom) == len(img), f"Domain has {len(dom)} points, image {len(img)}"
    assert_structures_match(qf_structure(dom), qf_structure(img))


def dtree(
    edges: Iterable[tuple[str, str]],
    leaves: Mapping[str, Iterable[PointId]],
    special: Mapping[str, str] | None = None,
) -> DTree:
    """A D-tree whose nodes are those mentioned in `edges` and `leaves`."""
    edges = list(edges)
    nodes = list(dict.fromkeys([*(n for edge in edges for n in edge), *leaves]))
    return DTree(nodes, edges, leaves, special or {})


def star(center: str, points: Sequence[PointId], special: PointId | None = None) -> DTree:
    """A star whose leaves "d_<p>" each host one point; special edge toward `special`."""
    leaves = {f"d_{p}": [p] for p in points}
    return dtree(
        [(center, leaf) for leaf in leaves],
        leaves,
        {center: f"d_{special}"} if special is not None else {},
    )


def path_tree(groups: Sequence[tuple[str, Sequence[PointId], PointId]]) -> DTree:
    """Inner nodes joined in order, each with singleton leaves and a special point."""
    edges: list[tuple[str, str]] = [
        (left, right) for (left, _, _), (right, _, _) in zip(groups, groups[1:])
    ]
    leaves: dict[str, list[PointId]] = {}
    special: dict[str, str] = {}
    for node, points, toward in groups:
        for p in points:
            leaves[f"d_{p}"] = [p]
            edges.append((node, f"d_{p}"))
        special[node] = f"d_{toward}"
    return dtree(edges, leaves, special)


def single_level(tree: DTree) -> Tower:
    return Tower.build([tree])
