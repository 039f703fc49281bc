"""Exact canonical codes for finite structures.

The code of a structure is the lexicographically least encoding over all
element orderings that respect a label-independent colouring. Colours come
from iterated refinement on tuple incidences; the search over orderings
prunes prefixes that already exceed the best code and explores only one of
two candidates whenever swapping them is an automorphism fixing the prefix.
"""

from __future__ import annotations

import json
from collections import defaultdict
from collections.abc import Sequence

from loguru import logger

from treelike.types import Element

from .representation import FinStructure

type _Block = tuple[tuple[int, tuple[int, ...]], ...]
type _Tuples = list[tuple[int, tuple[Element, ...]]]


def _relabel(values: dict[Element, object]) -> dict[Element, int]:
    ranks = {value: idx for idx, value in enumerate(sorted(set(map(repr, values.values()))))}
    return {element: ranks[repr(value)] for element, value in values.items()}


def _stable_colouring(structure: FinStructure, tuples: _Tuples) -> dict[Element, int]:
    by_element: dict[Element, _Tuples] = defaultdict(list)
    for sym, tup in tuples:
        for element in set(tup):
            by_element[element].append((sym, tup))

    def pattern(tup: tuple[Element, ...], element: Element) -> tuple[int, ...]:
        # Positions of `element` plus the equality pattern of the tuple.
        first_seen: dict[Element, int] = {}
        return tuple(
            -1 if e == element else first_seen.setdefault(e, len(first_seen))
            for e in tup
        )

    colours = {e: 0 for e in structure.universe}
    num_classes = 1
    while True:
        signatures: dict[Element, object] = {
            e: (
                colours[e],
                sorted(
                    (sym, pattern(tup, e), tuple(colours[x] for x in tup))
                    for sym, tup in by_element[e]
                ),
            )
            for e in structure.universe
        }
        refined = _relabel(signatures)
        refined_classes = len(set(refined.values()))
        colours = refined
        if refined_classes == num_classes:
            return colours
        num_classes = refined_classes


class _CanonicalSearch:
    def __init__(self, structure: FinStructure) -> None:
        self.structure = structure
        names = structure.signature.names
        self.tuples: _Tuples = [
            (names.index(name), tup)
            for name in names
            for tup in sorted(structure.relations[name], key=repr)
        ]
        self.tuple_set = {(sym, tup) for sym, tup in self.tuples}
        self.incident: dict[Element, _Tuples] = defaultdict(list)
        for sym, tup in self.tuples:
            for element in set(tup):
                self.incident[element].append((sym, tup))

        colours = _stable_colouring(structure, self.tuples)
        self.colours = colours
        self.best: list[_Block] | None = None

    def _block(self, position: dict[Element, int], element: Element) -> _Block:
        # Tuples whose largest position is the position of `element`.
        return tuple(
            sorted(
                (sym, tuple(position[e] for e in tup))
                for sym, tup in self.incident[element]
                if all(e in position for e in tup)
            )
        )

    def _swap_is_automorphism(self, u: Element, v: Element) -> bool:
        def swap(e: Element) -> Element:
            return v if e == u else u if e == v else e

        for sym, tup in self.incident[u] + self.incident[v]:
            if (sym, tuple(swap(e) for e in tup)) not in self.tuple_set:
                return False
        return True

    def _candidates(self, remaining: list[Element]) -> list[Element]:
        lowest = min(self.colours[e] for e in remaining)
        return [e for e in remaining if self.colours[e] == lowest]

    def run(self) -> list[_Block]:
        self._search({}, [], list(self.structure.universe))
        assert self.best is not None
        return self.best

    def _search(
        self,
        position: dict[Element, int],
        blocks: list[_Block],
        remaining: list[Element],
    ) -> None:
        if self.best is not None:
            prefix = self.best[: len(blocks)]
            if blocks > prefix:
                return
            if blocks < prefix:
                # Any completion beats the current best.
                self.best = None
        if not remaining:
            if self.best is None or blocks < self.best:
                self.best = list(blocks)
            return

        explored: list[Element] = []
        for candidate in self._candidates(remaining):
            if any(self._swap_is_automorphism(candidate, e) for e in explored):
                continue
            explored.append(candidate)
            position[candidate] = len(position)
            blocks.append(self._block(position, candidate))
            self._search(
                position, blocks, [e for e in remaining if e != candidate]
            )
            blocks.pop()
            del position[candidate]


def canonical_code(structure: FinStructure) -> bytes:
    """Isomorphism-invariant byte code: equal codes iff isomorphic structures."""
    blocks: Sequence[_Block] = (
        _CanonicalSearch(structure).run() if structure.size else []
    )
    payload = {
        "signature": [[s.name, s.arity] for s in structure.signature.symbols],
        "size": structure.size,
        "blocks": [[[sym, list(pos)] for sym, pos in block] for block in blocks],
    }
    logger.trace(f"Canonical code computed for structure of size {structure.size}")
    return json.dumps(payload, separators=(",", ":")).encode("utf-8")


__all__ = ["canonical_code"]
