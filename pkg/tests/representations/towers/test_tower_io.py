# pyright: reportUnusedFunction = false

from __future__ import annotations

import json

import pytest

from treelike.errors import ModelError
from treelike.representations.towers import (
    REFERENCE_TOWERS,
    BTower,
    BTree,
    Tower,
    btower_to_json,
    dump_tower,
    dump_tower_as,
    dump_tower_dot,
    load_btower,
    load_tower,
    reference_tower,
    tower_from_json,
    tower_to_json,
    validate_tower,
)


def describe_reference_towers() -> None:
    @pytest.mark.parametrize("name", REFERENCE_TOWERS)
    def should_load_valid_towers(name: str) -> None:
        assert validate_tower(reference_tower(name)).ok

    def should_record_exit_levels(tstar: Tower) -> None:
        assert tstar.exit == {"w": 1, "x": 2, "y": 2, "z": 2}
        assert tstar.num_levels == 2

    def should_reject_unknown_names() -> None:
        with pytest.raises(ModelError, match="unknown name"):
            reference_tower("Tnothing")


def describe_tower_json() -> None:
    def should_reload_dumped_tower(tdiamond: Tower) -> None:
        reloaded = load_tower(dump_tower(tdiamond))

        assert tower_to_json(reloaded) == tower_to_json(tdiamond)

    def should_derive_missing_exit_levels(tstar: Tower) -> None:
        data = tower_to_json(tstar)
        del data["exit"]

        assert tower_from_json(data).exit == tstar.exit

    def should_reject_invalid_json() -> None:
        with pytest.raises(ModelError, match="not valid JSON"):
            load_tower("{levels")

    @pytest.mark.parametrize(
        ("data", "message"),
        [
            pytest.param([], "nonempty 'levels' list", id="not an object"),
            pytest.param({"levels": []}, "nonempty 'levels' list", id="no levels"),
            pytest.param({"levels": [{"edges": []}]}, "malformed tower JSON", id="no nodes"),
            pytest.param({"levels": [{"nodes": ["a"]}], "exit": []}, "'exit' must be an object", id="bad exit"),
        ],
    )
    def should_reject_malformed_towers(data: object, message: str) -> None:
        with pytest.raises(ModelError, match=message):
            tower_from_json(data)


def describe_btower_json() -> None:
    def should_reload_dumped_btower() -> None:
        tree = BTree(["a", "b"], [("a", "b")], {"a": ["x"], "b": ["y", "z"]})
        btower = BTower.build([tree])

        reloaded = load_btower(dump_tower(btower))

        assert btower_to_json(reloaded) == btower_to_json(btower)
        assert json.loads(dump_tower(btower))["levels"][0]["hosts"] == {"a": ["x"], "b": ["y", "z"]}

    def should_reject_malformed_btowers() -> None:
        with pytest.raises(ModelError, match="malformed B-tower JSON"):
            load_btower('{"levels": [{"hosts": {}}]}')


def describe_graphviz() -> None:
    def should_draw_special_edges_red(tstar: Tower) -> None:
        source = dump_tower_dot(tstar, level=2)

        assert "red" in source
        assert "c2" in source
        assert "c1" not in source

    def should_label_leaves_with_points(tdiamond: Tower) -> None:
        assert 'label=x' in dump_tower_dot(tdiamond)

    def should_reject_missing_levels(tstar: Tower) -> None:
        with pytest.raises(ModelError, match="no such level"):
            dump_tower_dot(tstar, level=3)


def describe_dump_tower_as() -> None:
    def should_dump_json(tstar: Tower) -> None:
        assert json.loads(dump_tower_as("json", tstar)) == tower_to_json(tstar)

    def should_dump_graphviz(tstar: Tower) -> None:
        assert dump_tower_as("graphviz", tstar, level=2) == dump_tower_dot(tstar, 2)

    def should_reject_unknown_formats(tstar: Tower) -> None:
        with pytest.raises(ValueError, match="Unknown output format"):
            dump_tower_as("yaml", tstar)
