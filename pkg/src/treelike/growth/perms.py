"""Finite permutations in one-line notation and pattern containment."""

from __future__ import annotations

from typing import Any, override

import itertools
from collections.abc import Iterator, Sequence

import attrs
import rustworkx as rx
from attrs import field, frozen
from attrs_strict import type_validator

from treelike.errors import ModelError


def _validate_bijection(
    instance: Any, attribute: attrs.Attribute[Any], value: tuple[int, ...]
) -> None:
    if sorted(value) != list(range(1, len(value) + 1)):
        raise ValueError(f"{value} is not a permutation of 1..{len(value)}")


@frozen
class Perm:
    """A permutation σ of [n], stored as (σ(1), ..., σ(n))."""

    values: tuple[int, ...] = field(
        converter=tuple, validator=[type_validator(), _validate_bijection]
    )

    @classmethod
    def parse(cls, text: str) -> Perm:
        """Parse "3 1 2" or, for n ≤ 9, the compact "312"."""
        text = text.strip()
        tokens = text.replace(",", " ").split()
        if len(tokens) == 1 and len(text) > 1:
            tokens = list(text)
        try:
            return cls(tuple(int(token) for token in tokens))
        except ValueError as e:
            raise ModelError("permutation", f"cannot parse {text!r}", extra_msg=str(e)) from e

    @classmethod
    def identity(cls, n: int) -> Perm:
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def all(cls, n: int) -> Iterator[Perm]:
        return (cls(p) for p in itertools.permutations(range(1, n + 1)))

    def __len__(self) -> int:
        return len(self.values)

    def __call__(self, i: int) -> int:
        return self.values[i - 1]

    def inverse(self) -> Perm:
        inv = [0] * len(self)
        for position, value in enumerate(self.values, start=1):
            inv[value - 1] = position
        return Perm(tuple(inv))

    def pattern(self, positions: Sequence[int]) -> Perm:
        """Standardisation of the subsequence at the given 0-based positions."""
        sub = [self.values[p] for p in positions]
        ranks = {value: rank for rank, value in enumerate(sorted(sub), start=1)}
        return Perm(tuple(ranks[v] for v in sub))

    def precedes_2(self, i: int, j: int) -> bool:
        """i <₂ j, i.e. σ(i) < σ(j)."""
        return self(i) < self(j)

    @override
    def __str__(self) -> str:
        return " ".join(map(str, self.values))


def perm_contains(tau: Perm, sigma: Perm) -> bool:
    """Whether σ occurs as a pattern in τ."""
    return any(
        tau.pattern(positions) == sigma
        for positions in itertools.combinations(range(len(tau)), len(sigma))
    )


def antichain_member(i: int) -> Perm:
    """The i-th member of an infinite antichain under pattern containment.

    Member i has length 2i + 6: the prefix 2 3 5 1, an increasing oscillation
    through the middle, and the suffix N N-4 N-2 N-1. Its inversion graph is a
    path with a double fork at each end, so members are pairwise incomparable.
    """
    if i < 1:
        raise ModelError("antichain index", f"must be positive, got {i}")
    n = 2 * i + 6
    values = [2, 3, 5, 1]
    for top in range(7, n - 2, 2):
        values += [top, top - 3]
    values += [n, n - 4, n - 2, n - 1]
    return Perm(tuple(values))


def inversion_graph(sigma: Perm) -> rx.PyGraph:
    """Graph on values 1..n with an edge for every inverted pair."""
    graph = rx.PyGraph()
    graph.add_nodes_from(range(1, len(sigma) + 1))
    for p, q in itertools.combinations(range(len(sigma)), 2):
        a, b = sigma.values[p], sigma.values[q]
        if a > b:
            graph.add_edge(a - 1, b - 1, None)
    return graph


__all__ = ["Perm", "perm_contains", "antichain_member", "inversion_graph"]
