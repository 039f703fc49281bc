"""GraphViz exporting of tower levels."""

from __future__ import annotations

import graphviz as gv

from ..representation import Tower
from ..trees import DTree


def dump_node(tree: DTree, node: str, dot: gv.Graph) -> None:
    if node in tree.leaves:
        label = ", ".join(sorted(tree.leaves[node])) or node
        dot.node(node, label=label, shape="box")
    else:
        dot.node(node, label=node, shape="circle", style="filled", fillcolor="lightgrey", fontsize="10")


def dump_level(tree: DTree) -> gv.Graph:
    dot = gv.Graph()
    dot.attr("node", fontname="Courier")

    for node in tree.nodes:
        dump_node(tree, node, dot)
    for u, v in sorted(sorted(edge) for edge in tree.edges):
        if tree.special.get(u) == v or tree.special.get(v) == u:
            dot.edge(u, v, penwidth="2.5", color="red")
        else:
            dot.edge(u, v)

    return dot


def dump_tower_dot(tower: Tower, level: int = 1) -> str:
    """DOT source for one level; special edges are drawn thick and red."""
    return dump_level(tower.level(level)).source


__all__ = ["dump_level", "dump_tower_dot"]
