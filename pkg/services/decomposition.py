#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""Rooted-tree decomposition of connected unicyclic graphs."""

import logging
from typing import Dict, List, Tuple

from handlers.exceptions import NotUnicyclicError
from models.graph import Graph, normalize_edge
from models.reports import HookParams
from models.unicyclic import DeepVertexProfile, RootedTree, UnicyclicDecomposition
from services.canonical import rooted_tree_code
from services.graph_ops import (
    classify_vertices, connected_components, cycle_vertices, delete_edge,
    internal_edges, is_unicyclic, remove_internal_edges
)

logger = logging.getLogger(__name__)

def _ordered_cycle(g: Graph, on_cycle: List[int]) -> List[int]:
    members = set(on_cycle)
    start = min(on_cycle)
    order = [start]
    previous, current = None, start
    while True:
        step = [w for w in g.adjacency[current] if w in members and w != previous]
        nxt = min(step)
        if nxt == start:
            break
        order.append(nxt)
        previous, current = current, nxt
    return order

def _best_orientation(order: List[int], codes: Dict[int, str]) -> List[int]:
    c = len(order)
    candidates = []
    for direction in (order, list(reversed(order))):
        for shift in range(c):
            rotated = direction[shift:] + direction[:shift]
            candidates.append((tuple(codes[v] for v in rotated), rotated))
    return min(candidates, key=lambda item: item[0])[1]

def unicyclic_decompose(g: Graph) -> UnicyclicDecomposition:
    """
    Split a connected unicyclic graph into its cycle and rooted trees.

    The cycle is oriented so that the sequence of rooted-tree codes read
    around it is lexicographically smallest.

    Raises:
        NotUnicyclicError: If g is not connected with |E| = |V| ≥ 3
    """
    if not is_unicyclic(g):
        raise NotUnicyclicError(
            "need a connected graph with |E| = |V|, got n=%d |E|=%d" % (g.vertex_count, g.edge_count)
        )
    order = _ordered_cycle(g, cycle_vertices(g))
    cycle_edges = {normalize_edge(order[i], order[(i + 1) % len(order)]) for i in range(len(order))}
    forest = Graph.trusted(g.vertex_count, g.edges - cycle_edges)
    codes = {v: rooted_tree_code(forest.adjacency, v) for v in order}
    order = _best_orientation(order, codes)

    tree_of: Dict[int, int] = {}
    trees = []
    for i, root in enumerate(order):
        stack, members = [root], {root}
        while stack:
            v = stack.pop()
            for w in forest.adjacency[v]:
                if w not in members:
                    members.add(w)
                    stack.append(w)
        for v in members:
            tree_of[v] = i
        trees.append(RootedTree(root, frozenset(members)))

    degree = g.degrees()
    lam = tuple(1 + sum(1 for w in g.adjacency[v] if degree[w] == 1) for v in order)
    roots = set(order)
    mu: List[List[int]] = [[] for _ in order]
    for component in connected_components(remove_internal_edges(g)):
        if roots.isdisjoint(component):
            mu[tree_of[component[0]]].append(len(component))
    mu_parts = tuple(tuple(sorted(parts, reverse=True)) for parts in mu)
    r = sum(1 for t in trees if not t.is_trivial)

    return UnicyclicDecomposition(
        n=g.vertex_count,
        cycle=tuple(order),
        trees=tuple(trees),
        lam=lam,
        mu_parts=mu_parts,
        r=r,
        k=len(internal_edges(g)),
    )

def hook_params_from_graph(g: Graph, m1: int = 0) -> HookParams:
    d = unicyclic_decompose(g)
    return HookParams(n=d.n, c=d.c, k=d.k, r=d.r, m1=m1)

def deep_vertex_profile(g: Graph, d: UnicyclicDecomposition = None) -> DeepVertexProfile:
    """Sprout degrees and non-sprout deep degrees of a connected unicyclic graph."""
    if d is None:
        d = unicyclic_decompose(g)
    classification = classify_vertices(g, d.cycle)
    sprouts = classification.sprouts or frozenset()
    return DeepVertexProfile(
        sprout_degrees=tuple(sorted((g.degree(v) for v in sprouts), reverse=True)),
        nonsprout_deep_degrees=tuple(sorted((g.degree(v) for v in classification.deep - sprouts),
                                            reverse=True)),
    )

def tprime_profile(g: Graph, d: UnicyclicDecomposition = None) -> Tuple[int, Tuple[int, ...], bool]:
    """
    Data for the leading coefficient when exactly one tree is non-trivial.

    Deletes the cycle edge leaving the root of the non-trivial tree and reads
    the deep vertices of the resulting tree T′, root first when it is deep.

    Returns:
        Tuple[int, Tuple[int, ...], bool]: (c, deep degrees in T′, root is a sprout of g)

    Raises:
        NotUnicyclicError: If r != 1
    """
    if d is None:
        d = unicyclic_decompose(g)
    if d.r != 1:
        raise NotUnicyclicError("expected exactly one non-trivial tree, found r=%d" % d.r)
    i = d.nontrivial_indices()[0]
    root = d.cycle[i]
    neighbour = d.cycle[(i + 1) % d.c]
    tprime = delete_edge(g, (root, neighbour))
    deep = classify_vertices(tprime).deep
    others = sorted((tprime.degree(v) for v in deep if v != root), reverse=True)
    degrees = ([tprime.degree(root)] if root in deep else []) + others
    sprouts = classify_vertices(g, d.cycle).sprouts or frozenset()
    return d.c, tuple(degrees), root in sprouts
