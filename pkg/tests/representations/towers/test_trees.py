# pyright: reportUnusedFunction = false

from __future__ import annotations

import itertools

import pytest

from treelike.errors import ModelError, UnknownElementError
from treelike.representations.towers import BTree, DTree, TreeGraph
from test_utils.structure_matchers import dtree, path_tree, star


def diamond() -> DTree:
    return path_tree([("u1", ["x", "y"], "x"), ("u2", ["z", "w"], "z")])


def describe_tree_graph() -> None:
    def should_detect_trees() -> None:
        assert TreeGraph(["a", "b", "c"], [("a", "b"), ("b", "c")]).is_tree()

    def should_reject_cycles_and_forests() -> None:
        assert not TreeGraph(["a", "b", "c"], [("a", "b"), ("b", "c"), ("c", "a")]).is_tree()
        assert not TreeGraph(["a", "b", "c"], [("a", "b")]).is_tree()
        assert not TreeGraph([], []).is_tree()

    def should_reject_duplicate_nodes() -> None:
        with pytest.raises(ModelError, match="duplicate node"):
            TreeGraph(["a", "a"], [])

    def should_reject_unknown_nodes() -> None:
        with pytest.raises(UnknownElementError, match="unknown node"):
            TreeGraph(["a"], [("a", "b")])

    def should_find_paths() -> None:
        tree = diamond()

        assert tree.path("d_x", "d_w") == ["d_x", "u1", "u2", "d_w"]
        assert tree.path("u1", "u1") == ["u1"]

    def should_find_medians() -> None:
        tree = diamond()

        assert tree.median("d_x", "d_y", "d_z") == "u1"
        assert tree.median("d_x", "d_z", "d_w") == "u2"

    def should_split_into_branches() -> None:
        branches = diamond().branches("u1")

        assert branches == {
            "d_x": frozenset({"d_x"}),
            "d_y": frozenset({"d_y"}),
            "u2": frozenset({"u2", "d_z", "d_w"}),
        }

    def should_split_at_edges() -> None:
        left, right = diamond().edge_sides("u1", "u2")

        assert left == {"u1", "d_x", "d_y"}
        assert right == {"u2", "d_z", "d_w"}

    def should_find_branch_toward_node() -> None:
        tree = diamond()

        assert tree.branch_toward("u1", "d_w") == "u2"
        with pytest.raises(ModelError, match="center itself"):
            tree.branch_toward("u1", "u1")

    def should_list_sorted_neighbors() -> None:
        assert diamond().neighbors("u1") == ["d_x", "d_y", "u2"]
        assert diamond().degree("u2") == 3


def describe_dtree() -> None:
    def should_locate_points() -> None:
        tree = star("c", ["x", "y", "z", "w"], "x")

        assert tree.leaf_of("y") == "d_y"
        assert tree.points == {"x", "y", "z", "w"}
        assert tree.inner_nodes == ["c"]

    def should_reject_unknown_points() -> None:
        with pytest.raises(UnknownElementError, match="point not present"):
            star("c", ["x", "y", "z"]).leaf_of("q")

    def should_record_duplicate_points() -> None:
        tree = dtree([("c", "l1"), ("c", "l2"), ("c", "l3")], {"l1": ["x"], "l2": ["x"], "l3": ["y"]})

        assert tree.duplicate_points == ["x"]

    def should_find_ram_at_star_center() -> None:
        assert star("c", ["x", "y", "z", "w"], "x").ram("x", "y", "z") == "c"

    def should_find_ram_on_path() -> None:
        tree = diamond()

        assert tree.ram("x", "y", "z") == "u1"
        assert tree.ram("x", "z", "w") == "u2"

    def should_reject_ram_of_shared_leaf() -> None:
        tree = dtree([("c", "l1"), ("c", "l2"), ("c", "l3")], {"l1": ["x", "y"], "l2": ["z"], "l3": ["w"]})

        with pytest.raises(ModelError, match="not pairwise inequivalent"):
            tree.ram("x", "y", "z")

    def should_separate_paths_for_atom_D() -> None:
        tree = diamond()

        assert tree.atom_D("x", "y", "z", "w")
        assert not tree.atom_D("x", "z", "y", "w")
        assert not star("c", ["x", "y", "z", "w"], "x").atom_D("x", "y", "z", "w")

    def should_satisfy_D_relation_laws() -> None:
        tree = path_tree([("u1", ["a", "b"], "a"), ("u2", ["c"], "c"), ("u3", ["d", "e"], "d")])
        points = sorted(tree.points)
        for x, y, z, w in itertools.permutations(points, 4):
            if tree.atom_D(x, y, z, w):
                assert tree.atom_D(y, x, z, w)
                assert tree.atom_D(z, w, x, y)
                assert not tree.atom_D(x, z, y, w)
                for u in set(points) - {x, y, z, w}:
                    assert tree.atom_D(x, y, z, u) or tree.atom_D(u, y, z, w)

    def should_find_special_branch_points() -> None:
        tree = diamond()

        assert tree.special_branch_points("u1") == ["x"]
        assert tree.on_special_side("u2", "d_z")
        assert not tree.on_special_side("u2", "d_x")

    def should_induce_subtree_and_suppress_degree_two_nodes() -> None:
        tree = path_tree([("u1", ["a", "b"], "a"), ("u2", ["c"], "c"), ("u3", ["d", "e"], "d")])

        sub = tree.induced(["a", "b", "d"])

        assert sub is not None
        assert set(sub.nodes) == {"u1", "d_a", "d_b", "d_d"}
        assert sub.special == {"u1": "d_a"}
        assert sub.is_tree()

    def should_project_special_edges_through_removed_nodes() -> None:
        tree = dtree(
            [("u1", "d_a"), ("u1", "d_b"), ("u1", "u2"), ("u2", "d_c"), ("u2", "u3"), ("u3", "d_d"), ("u3", "d_e")],
            {f"d_{p}": [p] for p in "abcde"},
            {"u1": "d_a", "u2": "u1", "u3": "u2"},
        )

        sub = tree.induced(["b", "d", "e"])

        assert sub is not None
        assert sub.special == {"u3": "d_b"}

    def should_drop_special_edges_leaving_the_subtree() -> None:
        sub = diamond().induced(["y", "z", "w"])

        assert sub is not None
        assert sub.special == {"u2": "d_z"}
        assert "u1" not in sub.nodes

    def should_induce_single_leaf() -> None:
        sub = diamond().induced(["x", "q"])

        assert sub is not None
        assert sub.nodes == ("d_x",)

    def should_induce_nothing_from_absent_points() -> None:
        assert diamond().induced(["q"]) is None


def describe_btree() -> None:
    def path3() -> BTree:
        return BTree(["vx", "vy", "vz"], [("vx", "vy"), ("vy", "vz")], {"vx": ["x"], "vy": ["y"], "vz": ["z"]})

    def should_locate_points_on_vertices() -> None:
        assert path3().vertex_of("y") == "vy"
        assert path3().hosts("z")

    def should_skip_empty_hosts() -> None:
        tree = BTree(["a", "b"], [("a", "b")], {"a": ["x"], "b": []})

        assert tree.hosted == {"a": frozenset({"x"})}

    def should_find_unoccupied_medians() -> None:
        tree = BTree(
            ["c", "a", "b", "d"], [("c", "a"), ("c", "b"), ("c", "d")], {"a": ["x"], "b": ["y"], "d": ["z"]}
        )

        assert tree.unoccupied_medians(["a", "b", "d"]) == ["c"]
        assert tree.unoccupied_medians(["a", "b", "c", "d"]) == []

    def should_reject_unknown_points() -> None:
        with pytest.raises(UnknownElementError):
            path3().vertex_of("w")
