"""Witness levels and the relational atoms of a tower.

L and S atoms are witnessed at levels of the tower; the derived symbols
compare or combine witness levels. A tuple is witnessed at the greatest
qualifying level.
"""

from __future__ import annotations

import itertools
from collections.abc import Iterable, Sequence

from treelike.errors import ModelError
from treelike.representations.structure import FinStructure, Signature
from treelike.types import PointId

from .representation import BTower, Tower

#: Arity of every tower symbol.
ARITIES: dict[str, int] = {
    "L": 3,
    "S": 4,
    "L'": 4,
    "S'": 5,
    "R": 6,
    "Q": 7,
    "P": 6,
    "Q<=": 7,
    "Q>=": 7,
    "T": 8,
}

_ALIASES = {"L′": "L'", "S′": "S'", "Q≤": "Q<=", "Q≥": "Q>="}

L_SIGNATURE = Signature.of(("L", 3))
LS_SIGNATURE = Signature.of(("L", 3), ("S", 4))
L1_SIGNATURE = Signature.of(*((name, ARITIES[name]) for name in ("L", "S", "L'", "S'", "R", "Q")))
L2_SIGNATURE = Signature.of(*((name, ARITIES[name]) for name in ("L", "S", "P", "Q<=", "Q>=", "T")))

LANGUAGES: dict[str, Signature] = {
    "L": L_SIGNATURE,
    "LS": LS_SIGNATURE,
    "L1": L1_SIGNATURE,
    "L2": L2_SIGNATURE,
}


def normalize_symbol(symbol: str) -> str:
    symbol = _ALIASES.get(symbol, symbol)
    if symbol not in ARITIES:
        raise ModelError("atom", f"unknown symbol {symbol!r}")
    return symbol


def language(name: str) -> Signature:
    try:
        return LANGUAGES[name]
    except KeyError:
        raise ModelError(
            "language", f"unknown language {name!r}", extra_msg=f"Known: {', '.join(LANGUAGES)}"
        ) from None


def witness_L(tower: Tower, x: PointId, y: PointId, z: PointId) -> int | None:
    """Greatest level at which x lies in the special branch at ram(x, y, z)."""
    tower.check_points(x, y, z)
    if len({x, y, z}) < 3:
        return None

    def compute() -> int | None:
        for j in range(tower.num_levels, 0, -1):
            tree = tower.level(j)
            if not all(tree.hosts(p) for p in (x, y, z)):
                continue
            lx, ly, lz = (tree.leaf_of(p) for p in (x, y, z))
            if len({lx, ly, lz}) < 3:
                continue
            if tree.on_special_side(tree.median(lx, ly, lz), lx):
                return j
        return None

    return tower.memoized("L", (x, y, z), compute)


def witness_S(tower: Tower, x: PointId, y: PointId, z: PointId, w: PointId) -> int | None:
    """Greatest level at which the x-y and z-w paths are disjoint."""
    tower.check_points(x, y, z, w)
    if len({x, y, z, w}) < 4:
        return None

    def compute() -> int | None:
        for j in range(tower.num_levels, 0, -1):
            tree = tower.level(j)
            if not all(tree.hosts(p) for p in (x, y, z, w)):
                continue
            if len({tree.leaf_of(p) for p in (x, y, z, w)}) < 4:
                continue
            if tree.atom_D(x, y, z, w):
                return j
        return None

    return tower.memoized("S", (x, y, z, w), compute)


def _le(left: int | None, right: int | None) -> bool:
    return left is not None and right is not None and left <= right


def atom(tower: Tower, symbol: str, tup: Sequence[PointId]) -> bool:
    symbol = normalize_symbol(symbol)
    if len(tup) != ARITIES[symbol]:
        raise ModelError(
            "atom", "arity mismatch", extra_msg=f"{symbol} takes {ARITIES[symbol]} points, got {len(tup)}"
        )
    tower.check_points(*tup)

    match symbol:
        case "L":
            return witness_L(tower, *tup) is not None
        case "S":
            return witness_S(tower, *tup) is not None
        case "L'":
            j = witness_L(tower, *tup[:3])
            return j is not None and tower.exit[tup[3]] < j
        case "S'":
            j = witness_S(tower, *tup[:4])
            return j is not None and tower.exit[tup[4]] < j
        case "R":
            j = witness_L(tower, *tup[:3])
            return j is not None and j == witness_L(tower, *tup[3:])
        case "Q":
            j = witness_S(tower, *tup[:4])
            return j is not None and j == witness_L(tower, *tup[4:])
        case "P":
            return _le(witness_L(tower, *tup[:3]), witness_L(tower, *tup[3:]))
        case "Q<=":
            return _le(witness_S(tower, *tup[:4]), witness_L(tower, *tup[4:]))
        case "Q>=":
            return _le(witness_L(tower, *tup[4:]), witness_S(tower, *tup[:4]))
        case _:
            return _le(witness_S(tower, *tup[:4]), witness_S(tower, *tup[4:]))


def atom_L_btw(btower: BTower, x: PointId, y: PointId, z: PointId) -> bool:
    """Some level puts x, y and z on distinct vertices with x's between the others."""
    btower.check_points(x, y, z)
    for tree in btower.levels:
        if not all(tree.hosts(p) for p in (x, y, z)):
            continue
        vx, vy, vz = (tree.vertex_of(p) for p in (x, y, z))
        if len({vx, vy, vz}) == 3 and tree.between(vx, vy, vz):
            return True
    return False


def witnessed_atoms(
    tower: Tower, points: Sequence[PointId], arity: int
) -> dict[tuple[PointId, ...], int]:
    """Witness level of every L (arity 3) or S (arity 4) tuple over `points` that holds."""
    witness = witness_L if arity == 3 else witness_S
    result: dict[tuple[PointId, ...], int] = {}
    for tup in itertools.permutations(points, arity):
        j = witness(tower, *tup)
        if j is not None:
            result[tup] = j
    return result


def reduct(tower: Tower, subset: Iterable[PointId], signature: Signature | str) -> FinStructure:
    """The induced structure on `subset` over L, LS, L1 or L2."""
    if isinstance(signature, str):
        signature = language(signature)
    points = list(dict.fromkeys(subset))
    tower.check_points(*points)

    names = set(signature.names)
    l_atoms = witnessed_atoms(tower, points, 3)
    s_atoms = (
        witnessed_atoms(tower, points, 4) if names & {"S", "S'", "Q", "Q<=", "Q>=", "T"} else {}
    )

    def pairs(
        left: dict[tuple[PointId, ...], int],
        right: dict[tuple[PointId, ...], int],
        keep: str,
    ) -> frozenset[tuple[PointId, ...]]:
        compare = {"eq": int.__eq__, "le": int.__le__, "ge": int.__ge__}[keep]
        return frozenset(
            a + b for (a, i), (b, j) in itertools.product(left.items(), right.items()) if compare(i, j)
        )

    builders = {
        "L": lambda: frozenset(l_atoms),
        "S": lambda: frozenset(s_atoms),
        "L'": lambda: frozenset(
            t + (w,) for t, j in l_atoms.items() for w in points if tower.exit[w] < j
        ),
        "S'": lambda: frozenset(
            t + (u,) for t, j in s_atoms.items() for u in points if tower.exit[u] < j
        ),
        "R": lambda: pairs(l_atoms, l_atoms, "eq"),
        "Q": lambda: pairs(s_atoms, l_atoms, "eq"),
        "P": lambda: pairs(l_atoms, l_atoms, "le"),
        "Q<=": lambda: pairs(s_atoms, l_atoms, "le"),
        "Q>=": lambda: pairs(s_atoms, l_atoms, "ge"),
        "T": lambda: pairs(s_atoms, s_atoms, "le"),
    }
    relations = {name: builders[normalize_symbol(name)]() for name in signature.names}
    return FinStructure.trusted(signature, tuple(points), relations)


__all__ = [
    "ARITIES",
    "L_SIGNATURE",
    "LS_SIGNATURE",
    "L1_SIGNATURE",
    "L2_SIGNATURE",
    "LANGUAGES",
    "normalize_symbol",
    "language",
    "witness_L",
    "witness_S",
    "atom",
    "atom_L_btw",
    "witnessed_atoms",
    "reduct",
]
