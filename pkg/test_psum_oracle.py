#!/usr/bin/env python
# -*- coding: utf-8 -*-

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from handlers.exceptions import OracleTooLargeError, UsageError
from models.expansion import PowerSumExpansion, StarExpansion
from models.graph import Graph
from services import families
from services.enumeration import enumerate_connected_graphs, enumerate_unicyclic
from services.psum_oracle import (
    METHOD_BLOCKS, METHOD_SUBSETS, csf_power_sum, oracle_check, oracle_star_expansion,
    power_sum_product, star_in_power_sum, to_star_basis
)
from services.star_engine import StarEngine

@st.composite
def small_graphs(draw, max_n=6):
    n = draw(st.integers(1, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return Graph.from_edges(n, chosen)

def test_single_edge_in_power_sums():
    assert star_in_power_sum(2) == PowerSumExpansion(2, {(1, 1): 1, (2,): -1})
    assert csf_power_sum(families.path(2)) == PowerSumExpansion(2, {(1, 1): 1, (2,): -1})

def test_star_in_power_sums():
    assert star_in_power_sum(3) == PowerSumExpansion(3, {(1, 1, 1): 1, (2, 1): -2, (3,): 1})
    with pytest.raises(UsageError):
        star_in_power_sum(0)

def test_triangle_in_power_sums():
    # p111 − 3p21 + 2p3
    expected = PowerSumExpansion(3, {(1, 1, 1): 1, (2, 1): -3, (3,): 2})
    assert csf_power_sum(families.cycle(3)) == expected
    assert csf_power_sum(families.cycle(3), METHOD_BLOCKS) == expected

def test_change_of_basis_on_paw(paw):
    assert oracle_star_expansion(paw) == StarExpansion(4, {(4,): 2, (3, 1): -2, (2, 2): 1})

def test_star_products_invert():
    power_sums = power_sum_product(star_in_power_sum(3), star_in_power_sum(2))
    assert to_star_basis(power_sums) == StarExpansion(5, {(3, 2): 1})

def test_power_sums_in_the_star_basis():
    assert to_star_basis(PowerSumExpansion(2, {(2,): 1})) == StarExpansion(2, {(1, 1): 1, (2,): -1})
    assert to_star_basis(PowerSumExpansion(3, {(3,): 1})) == StarExpansion(3, {(3,): 1, (2, 1): -2, (1, 1, 1): 1})
    assert to_star_basis(PowerSumExpansion(1, {(1,): 1})) == StarExpansion(1, {(1,): 1})

@settings(max_examples=40, deadline=None)
@given(small_graphs())
def test_power_sum_methods_agree(g):
    assert csf_power_sum(g, METHOD_SUBSETS) == csf_power_sum(g, METHOD_BLOCKS)

@settings(max_examples=40, deadline=None)
@given(small_graphs())
def test_engine_matches_oracle_on_random_graphs(g):
    _, _, equal = oracle_check(g, METHOD_BLOCKS, engine=StarEngine())
    assert equal

def test_engine_matches_oracle_on_connected_graphs_up_to_six(engine):
    for n in range(1, 7):
        for g in enumerate_connected_graphs(n):
            assert engine.star_expand(g) == oracle_star_expansion(g, METHOD_BLOCKS)

@pytest.mark.slow
def test_engine_matches_oracle_on_connected_graphs_up_to_eight(engine):
    for n in (7, 8):
        for g in enumerate_connected_graphs(n):
            assert engine.star_expand(g) == oracle_star_expansion(g, METHOD_BLOCKS)

@pytest.mark.slow
def test_engine_matches_oracle_on_unicyclic_graphs_up_to_ten(engine):
    for n in range(3, 11):
        for g in enumerate_unicyclic(n):
            assert engine.star_expand(g) == oracle_star_expansion(g, METHOD_BLOCKS)

def test_edge_subset_guard():
    with pytest.raises(OracleTooLargeError):
        csf_power_sum(families.cycle(6), max_edges=5)
    with pytest.raises(UsageError):
        csf_power_sum(families.cycle(4), method='matrix')

def test_blocks_method_on_eight_vertices(engine, same_hook_pair):
    for g in same_hook_pair:
        assert oracle_star_expansion(g, METHOD_BLOCKS) == engine.star_expand(g)
