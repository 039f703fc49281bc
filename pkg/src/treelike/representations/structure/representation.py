"""Finite relational structures over a declared signature."""

from __future__ import annotations

from typing import Annotated, Self, final, override

from collections.abc import Iterable, Mapping

from pydantic import BaseModel, Field, StringConstraints, model_validator

from treelike.errors import ModelError, UnknownElementError
from treelike.types import Element

type SymbolName = Annotated[str, StringConstraints(pattern=r"^[A-Za-z][A-Za-z0-9_'<>=]*$")]


class _FrozenRepresentation(BaseModel, frozen=True, strict=True, extra="forbid"):
    pass


class Symbol(_FrozenRepresentation, frozen=True):
    name: SymbolName
    arity: Annotated[int, Field(ge=1)]

    @override
    def __str__(self) -> str:
        return f"{self.name}/{self.arity}"


@final
class Signature(_FrozenRepresentation, frozen=True):
    """Ordered list of relation symbols with their arities."""

    symbols: tuple[Symbol, ...]

    @model_validator(mode="after")
    def _check_distinct_names(self) -> Self:
        names = [symbol.name for symbol in self.symbols]
        if len(set(names)) != len(names):
            raise ValueError(f"Duplicate symbol names in signature: {names}")
        return self

    @classmethod
    def of(cls, *symbols: tuple[str, int]) -> Signature:
        return cls(symbols=tuple(Symbol(name=name, arity=arity) for name, arity in symbols))

    @property
    def names(self) -> tuple[str, ...]:
        return tuple(symbol.name for symbol in self.symbols)

    def arity(self, name: str) -> int:
        for symbol in self.symbols:
            if symbol.name == name:
                return symbol.arity
        raise UnknownElementError("signature", name, "unknown relation symbol")

    @override
    def __str__(self) -> str:
        return "{" + ", ".join(map(str, self.symbols)) + "}"


@final
class FinStructure(BaseModel, frozen=True, extra="forbid"):
    """A finite structure: ordered universe and one tuple set per symbol."""

    signature: Signature
    universe: tuple[Element, ...]
    relations: dict[str, frozenset[tuple[Element, ...]]]

    @model_validator(mode="after")
    def _check_relations(self) -> Self:
        if len(set(self.universe)) != len(self.universe):
            raise ValueError("Universe contains duplicate elements")
        if set(self.relations) != set(self.signature.names):
            raise ValueError(
                f"Relations {sorted(self.relations)} do not match signature {self.signature}"
            )
        universe = set(self.universe)
        for name, tuples in self.relations.items():
            arity = self.signature.arity(name)
            for tup in tuples:
                if len(tup) != arity:
                    raise ValueError(f"Tuple {tup} has wrong length for {name}/{arity}")
                if not universe.issuperset(tup):
                    raise ValueError(f"Tuple {tup} of {name} leaves the universe")
        return self

    @classmethod
    def build(
        cls,
        signature: Signature,
        universe: Iterable[Element],
        relations: Mapping[str, Iterable[tuple[Element, ...]]],
    ) -> FinStructure:
        """Construct a validated structure; missing symbols get empty relations."""
        return cls(
            signature=signature,
            universe=tuple(universe),
            relations={
                name: frozenset(tuple(t) for t in relations.get(name, ()))
                for name in signature.names
            },
        )

    @classmethod
    def trusted(
        cls,
        signature: Signature,
        universe: tuple[Element, ...],
        relations: dict[str, frozenset[tuple[Element, ...]]],
    ) -> FinStructure:
        """Construct without validation, for structures computed internally."""
        return cls.model_construct(
            signature=signature, universe=universe, relations=relations
        )

    @property
    def size(self) -> int:
        return len(self.universe)

    def holds(self, name: str, tup: tuple[Element, ...]) -> bool:
        return tup in self.relations[name]

    def tuple_count(self) -> int:
        return sum(len(tuples) for tuples in self.relations.values())


def empty_structure(signature: Signature) -> FinStructure:
    return FinStructure.trusted(
        signature, (), {name: frozenset() for name in signature.names}
    )


def induced(structure: FinStructure, subset: Iterable[Element]) -> FinStructure:
    """Induced substructure on `subset`, keeping the universe order."""
    wanted = set(subset)
    for element in wanted:
        if element not in structure.universe:
            raise UnknownElementError(
                "induced substructure", element, "element not in universe"
            )

    return FinStructure.trusted(
        structure.signature,
        tuple(e for e in structure.universe if e in wanted),
        {
            name: frozenset(t for t in tuples if wanted.issuperset(t))
            for name, tuples in structure.relations.items()
        },
    )


def rename(structure: FinStructure, mapping: Mapping[Element, Element]) -> FinStructure:
    """Relabel the elements of a structure along an injective mapping."""
    if len(set(mapping.values())) != len(mapping):
        raise ModelError("renaming", "mapping is not injective")
    for element in structure.universe:
        if element not in mapping:
            raise UnknownElementError("renaming", element, "element not in universe")

    return FinStructure.trusted(
        structure.signature,
        tuple(mapping[e] for e in structure.universe),
        {
            name: frozenset(tuple(mapping[e] for e in t) for t in tuples)
            for name, tuples in structure.relations.items()
        },
    )


__all__ = [
    "Symbol",
    "Signature",
    "FinStructure",
    "empty_structure",
    "induced",
    "rename",
]
