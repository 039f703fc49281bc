"""Towers carrying order-indiscernible sequences, and alternation counts along them."""

from __future__ import annotations

from typing import Literal, get_args

import itertools
from collections.abc import Iterable, Mapping, Sequence

from attrs import frozen
from loguru import logger

from treelike.errors import ModelError
from treelike.types import PointId
from treelike.utils import count_alternations

from .atoms import ARITIES, atom, atom_L_btw, normalize_symbol
from .representation import BTower, Tower
from .trees import BTree, DTree, NodeName

type Family = Literal["dset", "up_sfree", "down_sfree", "mixed"]
FAMILIES: tuple[Family, ...] = get_args(Family.__value__)

type BFamily = Literal["path", "comb", "up_star", "down_star", "down_mixed", "up_mixed"]
B_FAMILIES: tuple[BFamily, ...] = get_args(BFamily.__value__)


def _name(i: int) -> PointId:
    return f"a{i}"


def _star(center: NodeName, points: Sequence[PointId], special: PointId) -> DTree:
    leaves = {f"d_{p}": [p] for p in points}
    return DTree(
        [center, *leaves],
        [(center, leaf) for leaf in leaves],
        leaves,
        {center: f"d_{special}"},
    )


def _dset(n: int) -> Tower:
    # Caterpillar v2 - ... - v(n-1); a1 and a2 hang off v2, an and a(n-1) off v(n-1).
    spine = [f"v{k}" for k in range(2, n)]
    leaves = {f"d{k}": [_name(k)] for k in range(1, n + 1)}
    edges = list(itertools.pairwise(spine))
    edges.append(("v2", "d1"))
    edges.extend((f"v{k}", f"d{k}") for k in range(2, n))
    edges.append((f"v{n - 1}", f"d{n}"))
    special = {"v2": "d1", **{f"v{k}": f"v{k - 1}" for k in range(3, n)}}
    return Tower.build([DTree([*spine, *leaves], edges, leaves, special)])


def _up_sfree(n: int) -> Tower:
    levels = [
        _star(f"c{level}", [_name(i) for i in range(level, n + 1)], _name(level))
        for level in range(1, n - 1)
    ]
    return Tower.build(levels)


def _down_sfree(n: int) -> Tower:
    levels = [
        _star(f"c{level}", [_name(i) for i in range(1, n - level + 2)], _name(n - level + 1))
        for level in range(1, n - 1)
    ]
    return Tower.build(levels)


def _mixed_level(i: int, n: int) -> DTree:
    """Level built around the vertex separating a1..a(i+1) from a(i+2) and the rest."""
    tail = [_name(k) for k in range(i + 3, n + 1)]
    if i == 0:
        leaves = {"d1": [_name(1)], "d2": [_name(2)], "tail": [_name(k) for k in range(3, n + 1)]}
        return DTree(["v", *leaves], [("v", leaf) for leaf in leaves], leaves, {"v": "d1"})

    near = {f"d{k}": [_name(k)] for k in range(1, i + 2)}
    far = {f"d{i + 2}": [_name(i + 2)], "tail": tail}
    edges = [("v", "w"), *(("v", leaf) for leaf in near), *(("w", leaf) for leaf in far)]
    return DTree(["v", "w", *near, *far], edges, near | far, {"v": "d1", "w": "v"})


def _mixed(n: int) -> Tower:
    # The vertex for index i sits at level n-2-i, so levels descend as i grows.
    levels = [_mixed_level(i, n) for i in range(n - 3, -1, -1)]
    return Tower.build(levels)


def indiscernible_prefix(family: Family, n: int) -> tuple[Tower, list[PointId]]:
    """A tower and its sequence a1..an of the given indiscernible family."""
    if n < 4:
        raise ModelError("indiscernible prefix", f"needs n ≥ 4, got {n}")
    match family:
        case "dset":
            tower = _dset(n)
        case "up_sfree":
            tower = _up_sfree(n)
        case "down_sfree":
            tower = _down_sfree(n)
        case "mixed":
            tower = _mixed(n)
        case _:
            raise ModelError(
                "indiscernible prefix", f"unknown family {family!r}", extra_msg=f"Known: {', '.join(FAMILIES)}"
            )
    return tower, [_name(i) for i in range(1, n + 1)]


def _btree(edges: Iterable[tuple[NodeName, NodeName]], hosts: Mapping[NodeName, Sequence[PointId]]) -> BTree:
    edges = list(edges)
    nodes = list(dict.fromkeys([*(node for edge in edges for node in edge), *hosts]))
    return BTree(nodes, edges, hosts)


def _b_path(n: int) -> BTower:
    hosts = {f"u{k}": [_name(k)] for k in range(1, n + 1)}
    return BTower.build([_btree(itertools.pairwise(hosts), hosts)])


def _b_comb(n: int) -> BTower:
    # Spine s1 - ... - sn hosting b1..bn; each ak hangs off sk.
    spine = {f"s{k}": [f"b{k}"] for k in range(1, n + 1)}
    teeth = {f"t{k}": [_name(k)] for k in range(1, n + 1)}
    edges = [*itertools.pairwise(spine), *((f"s{k}", f"t{k}") for k in range(1, n + 1))]
    return BTower.build([_btree(edges, spine | teeth)])


def _b_star(center: PointId, points: Sequence[PointId]) -> BTree:
    leaves = {f"d_{p}": [p] for p in points}
    return _btree([("c", leaf) for leaf in leaves], {"c": [center], **leaves})


def _b_up_star(n: int) -> BTower:
    return BTower.build(
        _b_star(_name(level), [_name(k) for k in range(level + 1, n + 1)]) for level in range(1, n - 1)
    )


def _b_down_star(n: int) -> BTower:
    return BTower.build(
        _b_star(_name(n - level + 1), [_name(k) for k in range(1, n - level + 1)])
        for level in range(1, n - 1)
    )


def _down_mixed_level(k: int, n: int) -> BTree:
    """a1..ak in distinct branches at v; the class a(k+2).. sits between v and a(k+1)."""
    rest = [_name(j) for j in range(k + 2, n + 1)]
    if k == 1:
        return _btree([("d1", "mid"), ("mid", "d2")], {"d1": [_name(1)], "mid": rest, "d2": [_name(2)]})
    near = {f"d{j}": [_name(j)] for j in range(1, k + 1)}
    # vertices of higher levels, kept as pendants
    aux = {f"e{j}": [f"c{j}"] for j in range(2, k)}
    edges = [*(("v", node) for node in [*near, *aux]), ("v", "mid"), ("mid", f"d{k + 1}")]
    return _btree(edges, {"v": [f"c{k}"], **near, **aux, "mid": rest, f"d{k + 1}": [_name(k + 1)]})


def _up_mixed_level(k: int, n: int) -> BTree:
    """The class a1..ak has a(k+1) on one side and, past v, a(k+2).. on the other."""
    far = {f"d{j}": [_name(j)] for j in range(k + 2, n + 1)}
    aux = {f"e{j}": [f"c{j}"] for j in range(k + 1, n - 1)}
    edges = [("base", f"d{k + 1}"), ("base", "v"), *(("v", node) for node in [*far, *aux])]
    hosts = {
        "base": [_name(j) for j in range(1, k + 1)],
        f"d{k + 1}": [_name(k + 1)],
        "v": [f"c{k}"],
        **far,
        **aux,
    }
    return _btree(edges, hosts)


def indiscernible_bprefix(family: BFamily, n: int) -> tuple[BTower, list[PointId]]:
    """A B-tower and its sequence a1..an of the given indiscernible family.

    The comb and both mixed families need extra points (b1.., c2..) to keep
    every median occupied; they are not part of the sequence.
    """
    if n < 4:
        raise ModelError("indiscernible prefix", f"needs n ≥ 4, got {n}")
    match family:
        case "path":
            btower = _b_path(n)
        case "comb":
            btower = _b_comb(n)
        case "up_star":
            btower = _b_up_star(n)
        case "down_star":
            btower = _b_down_star(n)
        case "down_mixed":
            btower = BTower.build(_down_mixed_level(k, n) for k in range(n - 2, 0, -1))
        case "up_mixed":
            btower = BTower.build(_up_mixed_level(k, n) for k in range(1, n - 1))
        case _:
            raise ModelError(
                "indiscernible prefix", f"unknown family {family!r}", extra_msg=f"Known: {', '.join(B_FAMILIES)}"
            )
    return btower, [_name(i) for i in range(1, n + 1)]


@frozen
class AtomShape:
    """An atom with one free slot; the other slots take parameters."""

    symbol: str
    free_slot: int

    def __attrs_post_init__(self) -> None:
        symbol = normalize_symbol(self.symbol)
        if not 0 <= self.free_slot < ARITIES[symbol]:
            raise ModelError(
                "formula", "malformed formula", extra_msg=f"{symbol} has no slot {self.free_slot}"
            )

    @property
    def arity(self) -> int:
        return ARITIES[normalize_symbol(self.symbol)]

    @classmethod
    def all(cls) -> list[AtomShape]:
        return [cls(symbol, slot) for symbol, arity in ARITIES.items() for slot in range(arity)]

    def __str__(self) -> str:
        slots = ["_"] * self.arity
        slots[self.free_slot] = "x"
        return f"{self.symbol}({','.join(slots)})"


def default_pool(seq: Sequence[PointId]) -> list[PointId]:
    """Parameters at both ends and around the middle of the sequence."""
    m = len(seq) // 2
    return list(dict.fromkeys([seq[0], seq[m - 1], seq[m], seq[-1]]))


def max_alternation(
    tower: Tower,
    seq: Sequence[PointId],
    shape: AtomShape,
    pool: Sequence[PointId] | None = None,
) -> int:
    """Greatest number of truth-value changes of the atom along `seq` over parameter choices."""
    if not seq:
        return 0
    tower.check_points(*seq)
    pool = default_pool(seq) if pool is None else list(pool)
    tower.check_points(*pool)

    slot = shape.free_slot
    best = 0
    for params in itertools.product(pool, repeat=shape.arity - 1):
        values = (atom(tower, shape.symbol, (*params[:slot], x, *params[slot:])) for x in seq)
        best = max(best, count_alternations(values))
    logger.trace(f"{shape} along {len(seq)} points alternates at most {best} times")
    return best


def max_betweenness_alternation(
    btower: BTower,
    seq: Sequence[PointId],
    free_slot: int,
    pool: Sequence[PointId] | None = None,
) -> int:
    """max_alternation for the betweenness atom of a B-tower."""
    if not 0 <= free_slot < 3:
        raise ModelError("formula", "malformed formula", extra_msg=f"L has no slot {free_slot}")
    if not seq:
        return 0
    btower.check_points(*seq)
    pool = default_pool(seq) if pool is None else list(pool)
    btower.check_points(*pool)

    def holds(tup: tuple[PointId, ...]) -> bool:
        return atom_L_btw(btower, tup[0], tup[1], tup[2])

    best = 0
    for params in itertools.product(pool, repeat=2):
        values = (holds((*params[:free_slot], x, *params[free_slot:])) for x in seq)
        best = max(best, count_alternations(values))
    return best


__all__ = [
    "Family",
    "FAMILIES",
    "BFamily",
    "B_FAMILIES",
    "indiscernible_prefix",
    "indiscernible_bprefix",
    "max_betweenness_alternation",
    "AtomShape",
    "default_pool",
    "max_alternation",
]
