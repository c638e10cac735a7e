#!/usr/bin/env python
# -*- coding: utf-8 -*-

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from handlers.exceptions import FormulaDomainError
from models.expansion import StarExpansion
from models.graph import Graph
from models.partition import Partition, hook, sort_concat
from models.reports import HookParams
from models.unicyclic import DeepVertexProfile
from services import families
from services.closed_forms import (
    R_CASE_MANY, R_CASE_ONE, alternating_elementary_sum, bicyclic_cn, cuttlefish_leading,
    cycle_33_coeff, cycle_coeff, cycle_csf, cycle_no_ones_coeff, hook_vector, lead_coeff_cycle,
    lead_coeff_tree, lead_coeff_unicyclic_r1, lead_coeff_unicyclic_rge2, longest_hook,
    num_leaves_from_leading, pan_csf, path_csf, predict_leading_term, tree_hook_coeff,
    unicyclic_hook_coeff, unicyclic_hook_vector
)
from services.decomposition import hook_params_from_graph, unicyclic_decompose
from services.enumeration import enumerate_unicyclic
from services.graph_io import graph_from_networkx
from services.graph_ops import classify_vertices, leaf_component_partition
from utils.combinatorics import product_minus_one

def _sprouted_square() -> Graph:
    """4-cycle where every cycle vertex carries a two-vertex path."""
    edges = [(0, 1), (1, 2), (2, 3), (3, 0)]
    edges += [(i, i + 4) for i in range(4)] + [(i + 4, i + 8) for i in range(4)]
    return Graph.from_edges(12, edges)

def _spider() -> Graph:
    return Graph.from_edges(9, [(0, 1), (1, 2), (0, 3), (3, 4), (0, 5), (5, 6), (0, 7), (7, 8)])

def test_hook_vectors_of_same_hook_pair(engine, same_hook_pair):
    expected = [3, -9, 9, -3, 0, 0, 0]
    assert unicyclic_hook_vector(8, 4, 4, 4) == expected
    assert unicyclic_hook_vector(8, 4, 5, 1) == expected
    for g in same_hook_pair:
        assert hook_vector(engine.star_expand(g)) == expected

def test_hook_coefficients_from_graph_parameters(engine, triangle_with_tree, paw):
    for g in (triangle_with_tree, paw, families.cycle(5), families.four_cycle_fourteen()):
        x = engine.star_expand(g)
        for m1 in range(g.vertex_count - 1):
            params = hook_params_from_graph(g, m1)
            assert unicyclic_hook_coeff(params) == x[hook(g.vertex_count, m1)]

def test_tree_hooks(engine):
    x = engine.star_expand(families.path(4))
    assert [tree_hook_coeff(1, m1) for m1 in range(3)] == hook_vector(x)
    assert tree_hook_coeff(3, 2) == 3
    with pytest.raises(FormulaDomainError):
        tree_hook_coeff(-1, 0)

def test_longest_hook():
    assert longest_hook(4, 4, 4) == (3, -3)
    assert longest_hook(4, 5, 1) == (3, -3)
    assert longest_hook(5, 5, 0) == (3, -1)
    with pytest.raises(FormulaDomainError):
        longest_hook(4, 4, 5)

def test_hook_parameters_are_validated():
    with pytest.raises(FormulaDomainError):
        unicyclic_hook_coeff(HookParams(8, 2, 4, 0))
    with pytest.raises(FormulaDomainError):
        unicyclic_hook_coeff(HookParams(8, 4, 3, 1))
    with pytest.raises(FormulaDomainError):
        unicyclic_hook_coeff(HookParams(8, 4, 4, 1, -1))
    with pytest.raises(FormulaDomainError):
        # six internal edges need at least six vertices
        HookParams(5, 3, 6, 1).validate()
    assert HookParams.check_structure(3, 6, 1) is None
    assert longest_hook(3, 3, 0) == (1, -1)

def test_small_cycle_and_pan():
    assert cycle_csf(4) == StarExpansion(4, {(4,): 3, (3, 1): -5, (2, 2): 2, (2, 1, 1): 1})
    assert cycle_csf(3) == StarExpansion(3, {(3,): 2, (2, 1): -1})
    assert pan_csf(4) == StarExpansion(4, {(4,): 2, (3, 1): -2, (2, 2): 1})

@pytest.mark.parametrize('n', range(4, 11))
def test_family_formulas_match_engine(engine, n):
    assert path_csf(n) == engine.star_expand(families.path(n))
    assert cycle_csf(n) == engine.star_expand(families.cycle(n))
    assert pan_csf(n) == engine.star_expand(families.pan(n))

def test_cycle_coefficients_without_ones():
    for n in range(4, 11):
        for lam in cycle_csf(n).support():
            if lam.m1 == 0 and len(lam) >= 2:
                assert cycle_no_ones_coeff(n, lam) == cycle_coeff(n, lam)
    assert cycle_no_ones_coeff(6, Partition((3, 3))) == 3
    with pytest.raises(FormulaDomainError):
        cycle_no_ones_coeff(6, Partition((3, 2, 1)))

def test_two_threes_sequence():
    assert [cycle_33_coeff(n) for n in range(5, 11)] == [0, 3, 14, 40, 90, 175]
    for n in range(6, 11):
        lam = Partition((3, 3) + (1,) * (n - 6))
        assert cycle_coeff(n, lam) == (-1) ** (n - 6) * cycle_33_coeff(n)

def test_cycle_leading_coefficient(engine):
    for n in range(3, 9):
        lead, value = engine.leading_term(families.cycle(n))
        assert lead == (2,) + (1,) * (n - 2)
        assert value == lead_coeff_cycle(n)

@pytest.mark.parametrize('builder, expected', [
    (families.triangle_with_tree, ((3, 2, 1), -2)),
    (families.paw, ((2, 2), 1)),
    (families.four_cycle_fourteen, ((3, 3, 3, 2, 1, 1, 1), -2)),
    (_sprouted_square, ((2, 2, 2, 2, 1, 1, 1, 1), 11)),
])
def test_leading_terms(engine, builder, expected):
    g = builder()
    assert engine.leading_term(g) == expected
    assert predict_leading_term(g) == expected

def test_lead_coefficient_formulas():
    assert lead_coeff_unicyclic_r1(3, [2], True) == -2
    assert lead_coeff_unicyclic_r1(3, [], False) == 1
    assert lead_coeff_unicyclic_rge2(DeepVertexProfile((3,), (2, 2)), 3) == -2
    assert lead_coeff_unicyclic_rge2(DeepVertexProfile((3, 3, 3, 3), ()), 4) == 11
    assert lead_coeff_unicyclic_rge2(DeepVertexProfile((), (2,)), 2) == -1
    with pytest.raises(FormulaDomainError):
        lead_coeff_unicyclic_r1(3, [], True)
    with pytest.raises(FormulaDomainError):
        lead_coeff_unicyclic_rge2(DeepVertexProfile((3,), ()), 1)
    with pytest.raises(FormulaDomainError):
        lead_coeff_unicyclic_rge2(DeepVertexProfile((3, 3, 3), ()), 2)

def test_tree_leading_coefficients(engine):
    assert lead_coeff_tree([2]) == -1
    assert lead_coeff_tree([]) == 1
    assert lead_coeff_tree([4]) == -3
    assert engine.leading_term(families.path(5))[1] == -1
    assert engine.leading_term(_spider())[1] == -3
    with pytest.raises(FormulaDomainError):
        lead_coeff_tree([1])

def test_leaf_counts_from_leading_partition():
    assert num_leaves_from_leading(Partition((3, 2, 1)), R_CASE_ONE) == 2
    assert num_leaves_from_leading(Partition((2, 2)), R_CASE_ONE) == 1
    assert num_leaves_from_leading(Partition((3, 3, 3, 2, 1, 1, 1)), R_CASE_MANY) == 7
    with pytest.raises(FormulaDomainError):
        num_leaves_from_leading(Partition(()), R_CASE_ONE)
    with pytest.raises(FormulaDomainError):
        num_leaves_from_leading(Partition((2, 2)), 'r0')

def test_cuttlefish_leading(engine):
    assert cuttlefish_leading(3, 1) == (2, 2)
    assert engine.leading_term(families.cuttlefish(4, 2))[0] == cuttlefish_leading(4, 2)
    with pytest.raises(FormulaDomainError):
        cuttlefish_leading(3, 0)

@settings(max_examples=100)
@given(st.lists(st.integers(2, 9), max_size=6))
def test_alternating_elementary_sum(degrees):
    assert alternating_elementary_sum(degrees) == product_minus_one(degrees)

@pytest.mark.parametrize('shape, s, t, ell, expected', [
    ('typeI', 3, 3, 1, 4),
    ('typeI', 3, 4, 2, 6),
    ('typeII', 3, 3, 1, 4),
    ('typeII', 4, 4, 2, 7),
])
def test_bicyclic_top_coefficient(engine, shape, s, t, ell, expected):
    assert bicyclic_cn(shape, s, t, ell) == expected
    g = families.bicyclic(shape, s, t, ell)
    assert engine.star_expand(g)[(g.vertex_count,)] == expected

def test_bicyclic_domain():
    with pytest.raises(FormulaDomainError):
        bicyclic_cn('typeIII', 3, 3, 1)
    with pytest.raises(FormulaDomainError):
        bicyclic_cn('typeI', 2, 3, 1)

def test_family_domains():
    with pytest.raises(FormulaDomainError):
        path_csf(3)
    with pytest.raises(FormulaDomainError):
        cycle_csf(2)
    with pytest.raises(FormulaDomainError):
        pan_csf(3)

def test_leading_structure_up_to_eight(engine):
    for n in range(3, 9):
        for g in enumerate_unicyclic(n):
            assert predict_leading_term(g) == engine.leading_term(g)

@pytest.mark.slow
def test_leading_structure_up_to_ten(engine):
    for n in (9, 10):
        for g in enumerate_unicyclic(n):
            assert predict_leading_term(g) == engine.leading_term(g)

SIZES_UP_TO_TEN = [*range(2, 9), pytest.param(9, marks=pytest.mark.slow), pytest.param(10, marks=pytest.mark.slow)]

@pytest.mark.parametrize('n', SIZES_UP_TO_TEN)
def test_every_tree_leads_with_its_leaf_components(engine, n):
    for h in nx.nonisomorphic_trees(n):
        g = graph_from_networkx(h)
        deep = [g.degree(v) for v in classify_vertices(g).deep]
        assert engine.leading_term(g) == (leaf_component_partition(g), lead_coeff_tree(deep))

@pytest.mark.parametrize('n', SIZES_UP_TO_TEN[1:])
def test_decomposition_gives_leaf_components(n):
    for g in enumerate_unicyclic(n):
        d = unicyclic_decompose(g)
        assert sort_concat(d.lam, d.mu) == leaf_component_partition(g)
