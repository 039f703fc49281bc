# pyright: reportUnusedFunction = false

from __future__ import annotations

import itertools
import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from treelike.errors import SignatureMismatchError, UnknownElementError
from treelike.representations.structure import (
    FinStructure,
    Signature,
    compose,
    find_embedding,
    is_embedding,
    is_isomorphic,
    iter_embeddings,
    iter_isomorphisms,
    rename,
)
from test_utils.structure_matchers import assert_isomorphism

GRAPH = Signature.of(("E", 2))


def undirected(universe: list[int] | str, edges: list[tuple[object, object]]) -> FinStructure:
    return FinStructure.build(GRAPH, universe, {"E": [*edges, *((b, a) for a, b in edges)]})


def path3() -> FinStructure:
    return undirected("abc", [("a", "b"), ("b", "c")])


def triangle() -> FinStructure:
    return undirected([1, 2, 3], [(1, 2), (2, 3), (1, 3)])


def edge() -> FinStructure:
    return undirected("xy", [("x", "y")])


@st.composite
def graphs(draw: st.DrawFn, max_size: int = 5) -> FinStructure:
    size = draw(st.integers(min_value=1, max_value=max_size))
    pairs = list(itertools.combinations(range(size), 2))
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return undirected(list(range(size)), chosen)


def describe_iter_embeddings() -> None:
    def should_find_all_edge_embeddings() -> None:
        embeddings = list(iter_embeddings(edge(), path3()))

        assert len(embeddings) == 4
        for mapping in embeddings:
            assert is_embedding(mapping, edge(), path3())

    def should_preserve_non_edges() -> None:
        assert find_embedding(path3(), triangle()) is None

    def should_respect_fixed_elements() -> None:
        embeddings = list(iter_embeddings(edge(), path3(), fixed={"x": "a"}))

        assert embeddings == [{"x": "a", "y": "b"}]

    def should_reject_unknown_fixed_elements() -> None:
        with pytest.raises(UnknownElementError):
            list(iter_embeddings(edge(), path3(), fixed={"x": "z"}))

    def should_reject_signature_mismatch() -> None:
        other = FinStructure.build(Signature.of(("E", 2), ("P", 1)), [1], {})

        with pytest.raises(SignatureMismatchError):
            find_embedding(edge(), other)

    def should_not_embed_larger_structures() -> None:
        assert find_embedding(triangle(), edge()) is None

    @given(graphs(), st.integers(min_value=0, max_value=1000))
    def should_embed_relabelled_copies(structure: FinStructure, seed: int) -> None:
        images = list(structure.universe)
        random.Random(seed).shuffle(images)
        relabelled = rename(structure, dict(zip(structure.universe, images, strict=True)))

        mapping = find_embedding(structure, relabelled)

        assert mapping is not None
        assert is_embedding(mapping, structure, relabelled)


def describe_iter_isomorphisms() -> None:
    def should_count_automorphisms_of_path() -> None:
        assert len(list(iter_isomorphisms(path3(), path3()))) == 2

    def should_count_automorphisms_of_triangle() -> None:
        assert len(list(iter_isomorphisms(triangle(), triangle()))) == 6

    def should_reject_different_sizes() -> None:
        assert not is_isomorphic(edge(), path3())

    def should_map_relabelled_path() -> None:
        relabelled = rename(path3(), {"a": 3, "b": 1, "c": 2})

        mapping = next(iter_isomorphisms(path3(), relabelled))

        assert_isomorphism(mapping, path3(), relabelled)
        assert mapping["b"] == 1

    def should_distinguish_path_from_triangle() -> None:
        assert not is_isomorphic(undirected([1, 2, 3], [(1, 2), (2, 3)]), triangle())


def describe_compose() -> None:
    def should_apply_first_map_first() -> None:
        assert compose({"x": 1, "y": 2}, {1: "b", 2: "a"}) == {"x": "b", "y": "a"}

    def should_compose_embeddings() -> None:
        into_path = find_embedding(edge(), path3())
        into_triangle = {"a": 1, "b": 2, "c": 3}
        assert into_path is not None

        composed = compose(into_path, into_triangle)

        assert is_embedding(composed, edge(), triangle())


def describe_is_embedding() -> None:
    def should_reject_non_injective_maps() -> None:
        assert not is_embedding({"x": "a", "y": "a"}, edge(), path3())

    def should_reject_maps_breaking_edges() -> None:
        assert not is_embedding({"x": "a", "y": "c"}, edge(), path3())

    def should_reject_partial_maps() -> None:
        assert not is_embedding({"x": "a"}, edge(), path3())
