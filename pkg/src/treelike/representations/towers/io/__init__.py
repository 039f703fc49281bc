from __future__ import annotations

from collections.abc import Callable

from ..representation import Tower
from . import graphviz as _graphviz
from . import json as _json
from .graphviz import *
from .json import *


def dump_tower_as(output_format: str, tower: Tower, level: int = 1) -> str:
    dumper: Callable[[Tower], str]
    match output_format:
        case "json":
            dumper = dump_tower
        case "graphviz":
            dumper = lambda t: dump_tower_dot(t, level)
        case _:
            raise ValueError(f"Unknown output format: {output_format}")

    return dumper(tower)


__all__ = ["dump_tower_as", *_graphviz.__all__, *_json.__all__]  # pyright: ignore[reportUnsupportedDunderAll]
