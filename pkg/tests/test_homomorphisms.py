#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
Testes de busca, enumeração, núcleos, coloração única e fixação.
"""

from itertools import product

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from domain.exceptions import GraphMismatchError, NotAHomomorphismError
from domain.graphs import VertexSubset, disjoint_union, make_complete, make_cycle, make_empty, make_path
from domain.homomorphisms import (
    VertexMap,
    compose,
    count_homomorphisms,
    enumerate_homomorphisms,
    find_homomorphism,
    fixation,
    is_core,
    is_homomorphism,
    is_uniquely_h_colourable,
    require_homomorphism,
    restrict,
    union_map,
)
from strategies import small_graphs

TARGETS = {"K2": make_complete(2), "K3": make_complete(3), "C5": make_cycle(5), "K4": make_complete(4)}


def adjacency_matrix(g):
    a = np.zeros((g.n, g.n), dtype=np.int64)
    for u, v in g.edges():
        a[u, v] = a[v, u] = 1
    return a


def closed_walks(h, length):
    """hom(C_n, H) = tr(A_H^n)."""
    return int(np.trace(np.linalg.matrix_power(adjacency_matrix(h), length)))


def test_c7_to_c5_count_matches_trace():
    assert closed_walks(make_cycle(5), 7) == 70
    assert count_homomorphisms(make_cycle(7), make_cycle(5)) == 70


@settings(max_examples=30, deadline=None)
@given(st.integers(min_value=3, max_value=8), st.sampled_from(sorted(TARGETS)))
def test_cycle_counts_match_trace(length, target_name):
    h = TARGETS[target_name]
    assert count_homomorphisms(make_cycle(length), h) == closed_walks(h, length)


def brute_force_count(g, h):
    return sum(
        1
        for image in product(range(h.n), repeat=g.n)
        if all(h.has_edge(image[u], image[v]) for u, v in g.edges())
    )


@settings(max_examples=60, deadline=None)
@given(small_graphs(max_order=5), small_graphs(min_order=1, max_order=3))
def test_search_is_complete(g, h):
    expected = brute_force_count(g, h)
    assert count_homomorphisms(g, h) == expected
    found = find_homomorphism(g, h)
    assert (found is None) == (expected == 0)
    if found is not None:
        assert is_homomorphism(found)


def test_find_examples():
    assert find_homomorphism(make_cycle(5), make_complete(2)) is None
    f = find_homomorphism(make_cycle(6), make_complete(2))
    assert f is not None and is_homomorphism(f)


def test_enumeration_is_lexicographic():
    images = [f.image for f in enumerate_homomorphisms(make_path(2), make_complete(3))]
    assert images == sorted(images)
    assert len(images) == 12
    assert images[0] == (0, 1, 0)


def test_is_homomorphism_reports_edge():
    k2 = make_complete(2)
    check = is_homomorphism(VertexMap(make_path(1), k2, (0, 0)))
    assert not check and check.violating_edge == (0, 1)
    with pytest.raises(NotAHomomorphismError):
        require_homomorphism(VertexMap(make_path(1), k2, (1, 1)))


def test_compose():
    c5, k3 = make_cycle(5), make_complete(3)
    f = VertexMap(make_path(2), c5, (0, 1, 2))
    g = VertexMap(c5, k3, (0, 1, 0, 1, 2))
    assert compose(f, g).image == (0, 1, 0)
    with pytest.raises(GraphMismatchError):
        compose(g, f)


@pytest.mark.parametrize(
    "h, expected",
    [
        (make_complete(2), True),
        (make_complete(3), True),
        (make_cycle(5), True),
        (make_cycle(4), False),
        (make_path(2), False),
    ],
)
def test_is_core(h, expected):
    assert is_core(h) is expected


@pytest.mark.parametrize(
    "g, h, expected",
    [
        (make_complete(3), make_complete(3), True),
        (make_cycle(6), make_complete(2), True),
        (disjoint_union(make_complete(2), make_complete(2)), make_complete(2), False),
        (make_cycle(5), make_complete(2), False),
        (make_complete(2), make_complete(3), False),
    ],
)
def test_uniquely_colourable(g, h, expected):
    assert is_uniquely_h_colourable(g, h) is expected


def test_fixation_of_c7_by_c5():
    c7, c5 = make_cycle(7), make_cycle(5)
    f = next(enumerate_homomorphisms(c7, c5))
    fixed = fixation(c7, f, c5)
    assert fixed.graph.n == 12
    assert fixed.graph.num_edges == 7 + 5 + 7 * 2
    assert is_homomorphism(fixed.canonical_map)
    assert fixed.canonical_map.image == f.image + (0, 1, 2, 3, 4)
    assert is_uniquely_h_colourable(fixed.graph, c5)


FIXATION_CORPUS = [make_path(1), make_path(2), make_path(3), make_cycle(4), make_cycle(6), make_complete(3)]


@pytest.mark.parametrize("h_name", ["K2", "K3", "C5"])
def test_fixations_are_uniquely_colourable(h_name):
    h = TARGETS[h_name]
    for g in FIXATION_CORPUS:
        f = find_homomorphism(g, h)
        if f is None:
            continue
        fixed = fixation(g, f, h)
        assert is_homomorphism(fixed.canonical_map)
        expected_edges = g.num_edges + h.num_edges + sum(h.degree(f(x)) for x in g.vertices())
        assert fixed.graph.num_edges == expected_edges
        assert is_uniquely_h_colourable(fixed.graph, h)


def test_fixation_of_empty_graph_is_h():
    c5 = make_cycle(5)
    empty = make_empty(0)
    fixed = fixation(empty, VertexMap(empty, c5, ()), c5)
    assert fixed.graph == c5
    assert fixed.canonical_map.image == (0, 1, 2, 3, 4)


def test_fixation_rejects_non_homomorphism():
    k2 = make_complete(2)
    with pytest.raises(NotAHomomorphismError):
        fixation(make_path(1), VertexMap(make_path(1), k2, (0, 0)), k2)


def test_union_map():
    k2 = make_complete(2)
    f1 = VertexMap(make_path(1), k2, (0, 1))
    f2 = VertexMap(make_path(2), k2, (1, 0, 1))
    union = union_map(f1, f2)
    assert union.domain.n == 5
    assert union.image == (0, 1, 1, 0, 1)
    assert is_homomorphism(union)


def test_restrict():
    c5, k3 = make_cycle(5), make_complete(3)
    f = VertexMap(c5, k3, (0, 1, 0, 1, 2))
    assert restrict(f, VertexSubset.of(c5, [4, 1])) == {1: 1, 4: 2}
    assert restrict(f, VertexSubset.of(c5, [])) == {}
    assert restrict(f, VertexSubset.of(c5, c5.vertices())) == {0: 0, 1: 1, 2: 0, 3: 1, 4: 2}
    with pytest.raises(GraphMismatchError):
        restrict(f, VertexSubset.of(make_path(4), [0]))
