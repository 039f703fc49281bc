"""Unrooted trees hosting points: D-trees (points on leaves) and B-trees (points on vertices)."""

from __future__ import annotations

from typing import final, override

import itertools
from collections.abc import Iterable, Mapping, Sequence

import rustworkx as rx

from treelike.errors import ModelError, UnknownElementError
from treelike.types import PointId

type NodeName = str


class TreeGraph:
    """Named-node wrapper around an undirected rustworkx graph; node indices stay private."""

    def __init__(
        self, nodes: Sequence[NodeName], edges: Sequence[tuple[NodeName, NodeName]]
    ) -> None:
        self._graph: rx.PyGraph = rx.PyGraph()
        self._index: dict[NodeName, int] = {}
        for name in nodes:
            if name in self._index:
                raise ModelError("tree", f"duplicate node {name!r}")
            self._index[name] = self._graph.add_node(name)
        for u, v in edges:
            self._graph.add_edge(self._node_index(u), self._node_index(v), None)

        self._paths: dict[int, dict[int, list[int]]] = {}
        self._branches: dict[NodeName, dict[NodeName, frozenset[NodeName]]] = {}

    def _node_index(self, name: NodeName) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise UnknownElementError("tree", name, "unknown node") from None

    def _name(self, idx: int) -> NodeName:
        return self._graph[idx]

    @property
    def nodes(self) -> tuple[NodeName, ...]:
        return tuple(self._index)

    @property
    def edges(self) -> list[tuple[NodeName, NodeName]]:
        return [(self._name(u), self._name(v)) for u, v in self._graph.edge_list()]

    @property
    def num_nodes(self) -> int:
        return self._graph.num_nodes()

    def has_node(self, name: NodeName) -> bool:
        return name in self._index

    def degree(self, name: NodeName) -> int:
        return self._graph.degree(self._node_index(name))

    def neighbors(self, name: NodeName) -> list[NodeName]:
        return sorted(self._name(n) for n in self._graph.neighbors(self._node_index(name)))

    def is_tree(self) -> bool:
        if self._graph.num_nodes() == 0:
            return False
        return (
            self._graph.num_edges() == self._graph.num_nodes() - 1
            and rx.is_connected(self._graph)
        )

    def path(self, source: NodeName, target: NodeName) -> list[NodeName]:
        """Node names on the unique path, both ends included."""
        src, tgt = self._node_index(source), self._node_index(target)
        if src == tgt:
            return [source]
        if src not in self._paths:
            mapping = rx.dijkstra_shortest_paths(self._graph, src)
            self._paths[src] = {t: list(p) for t, p in mapping.items()}
        try:
            return [self._name(idx) for idx in self._paths[src][tgt]]
        except KeyError:
            raise ModelError("tree", f"{source!r} and {target!r} are not connected") from None

    def median(self, u: NodeName, v: NodeName, w: NodeName) -> NodeName:
        common = set(self.path(u, v)) & set(self.path(u, w)) & set(self.path(v, w))
        if len(common) != 1:
            raise ModelError("tree", f"no unique median of {u!r}, {v!r}, {w!r}")
        return common.pop()

    def between(self, node: NodeName, u: NodeName, v: NodeName) -> bool:
        return node in self.path(u, v)

    def branches(self, center: NodeName) -> dict[NodeName, frozenset[NodeName]]:
        """Components of the tree without `center`, keyed by the neighbour they contain."""
        if center not in self._branches:
            pruned = self._graph.copy()
            pruned.remove_node(self._node_index(center))
            result: dict[NodeName, frozenset[NodeName]] = {}
            for component in rx.connected_components(pruned):
                names = frozenset(pruned[idx] for idx in component)
                for neighbour in self.neighbors(center):
                    if neighbour in names:
                        result[neighbour] = names
            self._branches[center] = result
        return self._branches[center]

    def edge_sides(self, u: NodeName, v: NodeName) -> tuple[frozenset[NodeName], frozenset[NodeName]]:
        """The two components left after deleting the edge u-v."""
        u_side = frozenset(
            itertools.chain([u], *(nodes for nb, nodes in self.branches(u).items() if nb != v))
        )
        return u_side, frozenset(self.nodes) - u_side

    def branch_toward(self, center: NodeName, node: NodeName) -> NodeName:
        """The neighbour of `center` on the path to `node`."""
        path = self.path(center, node)
        if len(path) < 2:
            raise ModelError("tree", f"{node!r} is the center itself")
        return path[1]


@final
class DTree(TreeGraph):
    """A D-set level: points live on leaves, inner nodes carry a special edge."""

    def __init__(
        self,
        nodes: Sequence[NodeName],
        edges: Sequence[tuple[NodeName, NodeName]],
        leaves: Mapping[NodeName, Iterable[PointId]],
        special: Mapping[NodeName, NodeName],
    ) -> None:
        super().__init__(nodes, edges)
        for name in [*leaves, *special, *special.values()]:
            self._node_index(name)

        self.leaves: dict[NodeName, frozenset[PointId]] = {
            leaf: frozenset(points) for leaf, points in leaves.items()
        }
        self.special: dict[NodeName, NodeName] = dict(special)
        self._host: dict[PointId, NodeName] = {}
        #: Points listed on more than one leaf, reported by validation.
        self.duplicate_points: list[PointId] = []
        for leaf in sorted(self.leaves):
            for point in sorted(self.leaves[leaf]):
                if point in self._host:
                    self.duplicate_points.append(point)
                else:
                    self._host[point] = leaf
        self._points = frozenset(self._host)

    @property
    def points(self) -> frozenset[PointId]:
        return self._points

    @property
    def inner_nodes(self) -> list[NodeName]:
        return [node for node in self.nodes if node not in self.leaves]

    def hosts(self, point: PointId) -> bool:
        return point in self._host

    def leaf_of(self, point: PointId) -> NodeName:
        try:
            return self._host[point]
        except KeyError:
            raise UnknownElementError("D-tree", point, "point not present") from None

    def _distinct_leaves(self, points: Sequence[PointId]) -> list[NodeName]:
        leaves = [self.leaf_of(p) for p in points]
        if len(set(leaves)) != len(leaves):
            raise ModelError("point tuple", "not pairwise inequivalent")
        return leaves

    def ram(self, x: PointId, y: PointId, z: PointId) -> NodeName:
        """The node at which the leaves of x, y and z lie in different branches."""
        return self.median(*self._distinct_leaves([x, y, z]))

    def on_special_side(self, center: NodeName, node: NodeName) -> bool:
        return self.special.get(center) == self.branch_toward(center, node)

    def special_branch_points(self, center: NodeName) -> list[PointId]:
        special = self.special.get(center)
        if special is None:
            return []
        branch = self.branches(center).get(special, frozenset())
        return sorted(p for leaf in branch for p in self.leaves.get(leaf, ()))

    def atom_D(self, x: PointId, y: PointId, z: PointId, w: PointId) -> bool:
        lx, ly, lz, lw = self._distinct_leaves([x, y, z, w])
        return set(self.path(lx, ly)).isdisjoint(self.path(lz, lw))

    def induced(self, points: Iterable[PointId]) -> DTree | None:
        """Subtree spanned by the leaves of `points`, degree-2 nodes suppressed.

        Special edges are projected onto the kept nodes; a node whose special
        branch contains none of `points` gets no special edge. None if no
        point is present.
        """
        present = sorted({p for p in points if self.hosts(p)})
        if not present:
            return None
        occupied = sorted({self.leaf_of(p) for p in present})
        hosted = {leaf: frozenset(p for p in present if self._host[p] == leaf) for leaf in occupied}
        if len(occupied) == 1:
            return DTree(occupied, [], hosted, {})

        steiner: set[NodeName] = set()
        for leaf in occupied[1:]:
            steiner.update(self.path(occupied[0], leaf))

        def steiner_neighbours(node: NodeName) -> list[NodeName]:
            return [nb for nb in self.neighbors(node) if nb in steiner]

        kept = [
            node
            for node in self.nodes
            if node in steiner and (node in hosted or len(steiner_neighbours(node)) >= 3)
        ]
        kept_set = set(kept)

        def walk(start: NodeName, first_step: NodeName) -> NodeName:
            previous, current = start, first_step
            while current not in kept_set:
                (nxt,) = (nb for nb in steiner_neighbours(current) if nb != previous)
                previous, current = current, nxt
            return current

        edges: set[tuple[NodeName, NodeName]] = set()
        special: dict[NodeName, NodeName] = {}
        for node in kept:
            for nb in steiner_neighbours(node):
                other = walk(node, nb)
                edges.add((min(node, other), max(node, other)))
            if node not in hosted and self.special.get(node) in steiner:
                special[node] = walk(node, self.special[node])

        return DTree(kept, sorted(edges), hosted, special)

    @override
    def __repr__(self) -> str:
        return f"DTree(nodes={list(self.nodes)}, leaves={self.leaves}, special={self.special})"


@final
class BTree(TreeGraph):
    """A B-set level: points live on arbitrary vertices."""

    def __init__(
        self,
        nodes: Sequence[NodeName],
        edges: Sequence[tuple[NodeName, NodeName]],
        hosts: Mapping[NodeName, Iterable[PointId]],
    ) -> None:
        super().__init__(nodes, edges)
        for name in hosts:
            self._node_index(name)
        self.hosted: dict[NodeName, frozenset[PointId]] = {
            vertex: frozenset(points) for vertex, points in hosts.items() if points
        }
        self._vertex: dict[PointId, NodeName] = {}
        self.duplicate_points: list[PointId] = []
        for vertex in sorted(self.hosted):
            for point in sorted(self.hosted[vertex]):
                if point in self._vertex:
                    self.duplicate_points.append(point)
                else:
                    self._vertex[point] = vertex
        self._points = frozenset(self._vertex)

    @property
    def points(self) -> frozenset[PointId]:
        return self._points

    def hosts(self, point: PointId) -> bool:
        return point in self._vertex

    def vertex_of(self, point: PointId) -> NodeName:
        try:
            return self._vertex[point]
        except KeyError:
            raise UnknownElementError("B-tree", point, "point not present") from None

    def unoccupied_medians(self, vertices: Iterable[NodeName]) -> list[NodeName]:
        """Medians of triples of the given vertices that lie outside the set."""
        chosen = sorted(set(vertices))
        missing = {
            self.median(u, v, w)
            for u, v, w in itertools.combinations(chosen, 3)
        } - set(chosen)
        return sorted(missing)

    @override
    def __repr__(self) -> str:
        return f"BTree(nodes={list(self.nodes)}, hosts={self.hosted})"


__all__ = ["NodeName", "TreeGraph", "DTree", "BTree"]
