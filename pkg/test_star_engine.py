#!/usr/bin/env python
# -*- coding: utf-8 -*-

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from handlers.exceptions import CancellationError, UsageError
from models.expansion import StarExpansion
from models.graph import Graph
from services import families
from services.graph_io import graph_from_networkx
from services.graph_ops import disjoint_union, isolated_count, relabel
from services.star_engine import StarEngine, _accumulate, get_engine, star_expand

@st.composite
def small_graphs(draw, max_n=5):
    n = draw(st.integers(1, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return Graph.from_edges(n, chosen)

def test_paw_expansion(engine, paw):
    assert engine.star_expand(paw) == StarExpansion(4, {(4,): 2, (3, 1): -2, (2, 2): 1})

def test_triangle_expansion(engine):
    assert engine.star_expand(families.cycle(3)) == StarExpansion(3, {(3,): 2, (2, 1): -1})

def test_triangle_with_tree_expansion(engine, triangle_with_tree):
    expected = StarExpansion(6, {
        (6,): 2, (5, 1): -4, (4, 2): 1, (4, 1, 1): 2, (3, 3): 2, (3, 2, 1): -2,
    })
    assert engine.star_expand(triangle_with_tree) == expected
    assert engine.leading_term(triangle_with_tree) == ((3, 2, 1), -2)

def test_star_forests_expand_to_one_term(engine):
    assert engine.star_expand(families.star(5)) == StarExpansion.star(5)
    assert engine.star_expand(Graph.from_edges(3, [])) == StarExpansion(3, {(1, 1, 1): 1})
    forest = disjoint_union(families.star(3), families.star(2))
    assert engine.star_expand(forest) == StarExpansion(5, {(3, 2): 1})

def test_path_p4(engine):
    # the only internal edge of P4 gives P2+P2, P3+K1 and St_4
    assert engine.star_expand(families.path(4)) == StarExpansion(4, {(4,): 1, (3, 1): -1, (2, 2): 1})

def test_expansion_is_multiplicative(engine, paw):
    c3 = families.cycle(3)
    union = disjoint_union(paw, c3, Graph.from_edges(1, []))
    expected = engine.star_expand(paw).product(engine.star_expand(c3)).product(StarExpansion(1, {(1,): 1}))
    assert engine.star_expand(union) == expected

@settings(max_examples=100, deadline=None)
@given(small_graphs(), small_graphs())
def test_disjoint_union_multiplies(g, h):
    engine = StarEngine()
    assert engine.star_expand(disjoint_union(g, h)) == engine.star_expand(g).product(engine.star_expand(h))

@settings(max_examples=40, deadline=None)
@given(small_graphs())
def test_memoized_expansion_matches_full_tree(g):
    assert StarEngine().star_expand(g) == StarEngine(memoize=False).star_expand(g)

@settings(max_examples=40, deadline=None)
@given(small_graphs(max_n=6))
def test_edge_policies_agree(g):
    results = {policy: StarEngine(policy=policy).star_expand(g) for policy in StarEngine.POLICIES}
    assert results['lowest'] == results['highest'] == results['canonical']

@settings(max_examples=40, deadline=None)
@given(small_graphs(max_n=6))
def test_coefficient_signs(g):
    x = StarEngine().star_expand(g)
    base = isolated_count(g)
    for partition, value in x.items():
        expected = -1 if (partition.m1 - base) % 2 else 1
        assert (value > 0) == (expected > 0)

def test_dnc_leaves_of_triangle(engine):
    leaves = sorted((tuple(leaf.partition), leaf.sign) for leaf in engine.iter_dnc_leaves(families.cycle(3)))
    assert leaves == [((2, 1), -1), ((3,), 1), ((3,), 1)]

def test_opposite_signs_are_rejected():
    terms = {(2, 1): -1}
    with pytest.raises(CancellationError):
        _accumulate(terms, (2, 1), 1)
    _accumulate(terms, (2, 1), -2)
    assert terms == {(2, 1): -3}

def test_cache_reuse_and_clear(engine):
    engine.star_expand(families.cycle(6))
    assert engine.cache_size > 0
    misses = engine.misses
    engine.star_expand(families.cycle(6))
    assert engine.misses == misses
    assert engine.hits > 0
    engine.clear_cache()
    assert engine.cache_size == 0
    assert engine.hits == engine.misses == 0

def test_unknown_policy():
    with pytest.raises(UsageError):
        StarEngine(policy='random')

def test_shared_engine_is_reused():
    assert get_engine() is get_engine()
    assert star_expand(families.paw()) == get_engine().star_expand(families.paw())

def _connected_graphs(n):
    for h in nx.graph_atlas_g():
        if h.number_of_nodes() == n and nx.is_connected(h):
            yield graph_from_networkx(h)

@pytest.mark.parametrize('n', [2, 3, 4, 5, 6, pytest.param(7, marks=pytest.mark.slow)])
def test_edge_policies_agree_on_every_connected_graph(n):
    engines = [StarEngine(policy=policy) for policy in StarEngine.POLICIES]
    for g in _connected_graphs(n):
        first, *rest = [engine.star_expand(g) for engine in engines]
        assert all(x == first for x in rest)

@pytest.mark.parametrize('n', [2, 3, 4, 5])
def test_unmemoized_policies_agree_on_every_connected_graph(n):
    engines = [StarEngine(policy=policy, memoize=False) for policy in StarEngine.POLICIES]
    for g in _connected_graphs(n):
        first, *rest = [engine.star_expand(g) for engine in engines]
        assert all(x == first for x in rest)

@settings(max_examples=40, deadline=None)
@given(small_graphs(), st.randoms(use_true_random=False))
def test_canonical_policy_ignores_labels(g, rng):
    engine = StarEngine(policy=StarEngine.POLICY_CANONICAL, memoize=False)
    perm = list(range(g.vertex_count))
    rng.shuffle(perm)

    def leaves(graph):
        return sorted((tuple(leaf.partition), leaf.sign) for leaf in engine.iter_dnc_leaves(graph))

    assert leaves(relabel(g, perm)) == leaves(g)
