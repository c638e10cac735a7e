#!/usr/bin/env python
# -*- coding: utf-8 -*-

import networkx as nx
import pytest

from handlers.exceptions import EnumerationRangeError
from services.canonical import canonical_form
from services.decomposition import unicyclic_decompose
from services.enumeration import (
    count_unicyclic, enumerate_connected_graphs, enumerate_unicyclic,
    enumerate_unicyclic_slow, graph_from_trees, rooted_trees
)
from services.graph_ops import is_connected, is_unicyclic

UNICYCLIC_COUNTS = {3: 1, 4: 2, 5: 5, 6: 13, 7: 33, 8: 89, 9: 240, 10: 657, 11: 1806, 12: 5026}

def test_rooted_tree_counts():
    assert [len(rooted_trees(k)) for k in range(1, 8)] == [1, 1, 2, 4, 9, 20, 48]
    assert rooted_trees(0) == ()

def test_graph_from_trees():
    g = graph_from_trees(((), ((),), ()))
    assert g.vertex_count == 4
    assert is_unicyclic(g)
    assert unicyclic_decompose(g).c == 3

@pytest.mark.parametrize('n', range(3, 10))
def test_unicyclic_counts(n):
    graphs = list(enumerate_unicyclic(n))
    assert len(graphs) == UNICYCLIC_COUNTS[n]
    assert all(is_unicyclic(g) and g.vertex_count == n for g in graphs)
    assert len({canonical_form(g) for g in graphs}) == len(graphs)

def test_cycle_size_filter():
    assert count_unicyclic(5, 5) == 1
    assert count_unicyclic(6, 3) + count_unicyclic(6, 4) + count_unicyclic(6, 5) + count_unicyclic(6, 6) == 13
    assert all(unicyclic_decompose(g).c == 4 for g in enumerate_unicyclic(7, 4))

@pytest.mark.parametrize('n', range(3, 9))
def test_independent_generator_agrees(n):
    fast = {canonical_form(g) for g in enumerate_unicyclic(n)}
    slow = {canonical_form(g) for g in enumerate_unicyclic_slow(n)}
    assert fast == slow

@pytest.mark.slow
@pytest.mark.parametrize('n', range(10, 13))
def test_unicyclic_counts_up_to_twelve(n):
    assert count_unicyclic(n) == UNICYCLIC_COUNTS[n]

@pytest.mark.slow
def test_independent_generator_agrees_up_to_ten():
    for n in (9, 10):
        fast = {canonical_form(g) for g in enumerate_unicyclic(n)}
        assert fast == {canonical_form(g) for g in enumerate_unicyclic_slow(n)}

def test_connected_graphs_match_atlas():
    atlas = {}
    for h in nx.graph_atlas_g():
        if h.number_of_nodes() and nx.is_connected(h):
            atlas[h.number_of_nodes()] = atlas.get(h.number_of_nodes(), 0) + 1
    for n in range(1, 7):
        graphs = enumerate_connected_graphs(n)
        assert len(graphs) == atlas[n]
        assert all(is_connected(g) for g in graphs)

@pytest.mark.slow
def test_connected_graph_counts_up_to_eight():
    assert [len(enumerate_connected_graphs(n)) for n in (7, 8)] == [853, 11117]

def test_enumeration_ranges():
    with pytest.raises(EnumerationRangeError):
        list(enumerate_unicyclic(2))
    with pytest.raises(EnumerationRangeError):
        count_unicyclic(15)
    with pytest.raises(EnumerationRangeError):
        count_unicyclic(6, 7)
    with pytest.raises(EnumerationRangeError):
        enumerate_connected_graphs(9)
