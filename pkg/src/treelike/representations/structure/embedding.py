"""Strong (induced) embeddings and isomorphisms between finite structures.

Embeddings are searched by backtracking over the elements of the source in
universe order. Negated atoms are never enumerated: when the partial map is a
bijection between the assigned sets, it preserves all atoms iff every source
tuple inside the assigned set maps to a target tuple and both sides contain
equally many tuples.
"""

from __future__ import annotations

from collections import Counter, defaultdict
from collections.abc import Iterator, Mapping

from loguru import logger

from treelike.errors import SignatureMismatchError, UnknownElementError
from treelike.types import Element
from treelike.utils import first

from .representation import FinStructure

type Embedding = dict[Element, Element]
type _Incidence = dict[Element, list[tuple[str, tuple[Element, ...]]]]


def _incidence(structure: FinStructure) -> _Incidence:
    incidence: _Incidence = {e: [] for e in structure.universe}
    for name, tuples in structure.relations.items():
        for tup in tuples:
            for element in set(tup):
                incidence[element].append((name, tup))
    return incidence


def _check_signatures(a: FinStructure, b: FinStructure) -> None:
    if a.signature != b.signature:
        raise SignatureMismatchError(a.signature, b.signature)


class _EmbeddingSearch:
    def __init__(self, source: FinStructure, target: FinStructure) -> None:
        self.source = source
        self.target = target
        self.source_incidence = _incidence(source)
        self.target_incidence = _incidence(target)

    def _new_tuples(
        self,
        incidence: _Incidence,
        element: Element,
        assigned: set[Element],
    ) -> list[tuple[str, tuple[Element, ...]]]:
        # Tuples that become fully assigned once `element` is added.
        return [
            (name, tup)
            for name, tup in incidence[element]
            if all(e == element or e in assigned for e in tup)
        ]

    def _consistent(
        self,
        mapping: Embedding,
        element: Element,
        image: Element,
    ) -> bool:
        src_new = self._new_tuples(self.source_incidence, element, set(mapping))
        tgt_new = self._new_tuples(
            self.target_incidence, image, set(mapping.values())
        )
        if len(src_new) != len(tgt_new):
            return False
        if Counter(name for name, _ in src_new) != Counter(name for name, _ in tgt_new):
            return False

        extended = {**mapping, element: image}
        return all(
            self.target.holds(name, tuple(extended[e] for e in tup))
            for name, tup in src_new
        )

    def search(self, fixed: Mapping[Element, Element]) -> Iterator[Embedding]:
        mapping: Embedding = {}
        for element, image in fixed.items():
            if not self._consistent(mapping, element, image) or image in mapping.values():
                return
            mapping[element] = image

        order = [e for e in self.source.universe if e not in mapping]
        yield from self._extend(mapping, order, 0)

    def _extend(
        self, mapping: Embedding, order: list[Element], depth: int
    ) -> Iterator[Embedding]:
        if depth == len(order):
            yield dict(mapping)
            return

        element = order[depth]
        used = set(mapping.values())
        for image in self.target.universe:
            if image in used or not self._consistent(mapping, element, image):
                continue
            mapping[element] = image
            yield from self._extend(mapping, order, depth + 1)
            del mapping[element]


def iter_embeddings(
    source: FinStructure,
    target: FinStructure,
    *,
    fixed: Mapping[Element, Element] | None = None,
) -> Iterator[Embedding]:
    """Enumerate all strong embeddings of `source` into `target`.

    If `fixed` is given, only embeddings extending that partial map are produced.
    """
    _check_signatures(source, target)
    fixed = fixed or {}
    for element, image in fixed.items():
        if element not in source.universe:
            raise UnknownElementError("partial map", element, "element not in universe")
        if image not in target.universe:
            raise UnknownElementError("partial map", image, "element not in universe")

    if source.size > target.size:
        return iter(())
    return _EmbeddingSearch(source, target).search(fixed)


def find_embedding(
    source: FinStructure,
    target: FinStructure,
    *,
    fixed: Mapping[Element, Element] | None = None,
) -> Embedding | None:
    """First strong embedding of `source` into `target` in search order, or None."""
    return first(iter_embeddings(source, target, fixed=fixed))


def _tuple_profile(structure: FinStructure) -> list[tuple[str, int]]:
    return sorted((name, len(tuples)) for name, tuples in structure.relations.items())


def _degree_profile(structure: FinStructure) -> list[tuple[tuple[str, int], ...]]:
    degrees: dict[Element, Counter[tuple[str, int]]] = defaultdict(Counter)
    for name, tuples in structure.relations.items():
        for tup in tuples:
            for position, element in enumerate(tup):
                degrees[element][name, position] += 1
    return sorted(tuple(sorted(degrees[e].items())) for e in structure.universe)


def iter_isomorphisms(
    a: FinStructure,
    b: FinStructure,
    *,
    fixed: Mapping[Element, Element] | None = None,
) -> Iterator[Embedding]:
    """Enumerate all isomorphisms from `a` to `b` extending `fixed`."""
    _check_signatures(a, b)
    if a.size != b.size or _tuple_profile(a) != _tuple_profile(b):
        return iter(())
    if _degree_profile(a) != _degree_profile(b):
        return iter(())
    return iter_embeddings(a, b, fixed=fixed)


def is_isomorphic(a: FinStructure, b: FinStructure) -> bool:
    result = first(iter_isomorphisms(a, b)) is not None
    logger.trace(f"Isomorphism test on {a.size} elements: {result}")
    return result


def compose(
    first_map: Mapping[Element, Element], second_map: Mapping[Element, Element]
) -> Embedding:
    """The map `second_map ∘ first_map`."""
    return {element: second_map[image] for element, image in first_map.items()}


def is_embedding(
    mapping: Mapping[Element, Element], source: FinStructure, target: FinStructure
) -> bool:
    """Check directly that `mapping` is a strong embedding, enumerating all tuples."""
    _check_signatures(source, target)
    if set(mapping) != set(source.universe):
        return False
    if len(set(mapping.values())) != len(mapping):
        return False
    image_set = set(mapping.values())
    for name, tuples in source.relations.items():
        mapped = {tuple(mapping[e] for e in tup) for tup in tuples}
        inside = {t for t in target.relations[name] if image_set.issuperset(t)}
        if mapped != inside:
            return False
    return True


__all__ = [
    "Embedding",
    "iter_embeddings",
    "find_embedding",
    "iter_isomorphisms",
    "is_isomorphic",
    "compose",
    "is_embedding",
]
