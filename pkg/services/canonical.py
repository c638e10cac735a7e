#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
Canonical labelings and isomorphism codes.

Forests are labeled from center-rooted sorted-subtree codes. Every other
graph goes through equitable partition refinement with a backtracking
search over target cells; twin vertices and automorphisms found along the
way prune the search tree. The code of a graph is its vertex count plus
the upper-triangle adjacency bits under the canonical labeling, so equal
codes mean equal labeled graphs and hence isomorphic inputs.
"""

import logging
from typing import Dict, List, Optional, Sequence, Tuple

from models.graph import Graph, normalize_edge
from services.graph_ops import connected_components, is_forest

logger = logging.getLogger(__name__)

CanonicalCode = bytes

def canonical_form(g: Graph) -> CanonicalCode:
    """Isomorphism code of g; equal iff the graphs are isomorphic."""
    return canonical_graph(g)[1]

def canonical_labeling(g: Graph) -> List[int]:
    """Permutation old index -> canonical index."""
    if is_forest(g):
        return _forest_labeling(g)
    return _search_labeling(g)

def canonical_graph(g: Graph) -> Tuple[Graph, CanonicalCode]:
    """The canonically relabeled graph together with its code."""
    labeling = canonical_labeling(g)
    edges = frozenset(normalize_edge(labeling[u], labeling[v]) for u, v in g.edges)
    return Graph.trusted(g.vertex_count, edges), encode(g.vertex_count, edges)

def code_hex(code: CanonicalCode) -> str:
    return code.hex()

def encode(n: int, edges) -> CanonicalCode:
    bits = _edge_bits(n, edges)
    total = n * (n - 1) // 2
    return n.to_bytes(2, 'big') + bits.to_bytes((total + 7) // 8, 'big')

def _edge_bits(n: int, edges) -> int:
    total = n * (n - 1) // 2
    bits = 0
    for i, j in edges:
        position = i * n - i * (i + 1) // 2 + (j - i - 1)
        bits |= 1 << (total - 1 - position)
    return bits

# rooted tree codes

def rooted_tree_code(adjacency: Sequence, root: int, blocked: Optional[int] = None) -> str:
    """
    Sorted-subtree code of the tree hanging from root.

    Args:
        adjacency: Neighbour sets indexed by vertex
        root (int): Root vertex
        blocked (int, optional): Neighbour of root that is not part of the tree

    Returns:
        str: "(" + sorted child codes + ")"
    """
    codes, _ = _rooted_codes(adjacency, root, blocked)
    return codes[root]

def _rooted_codes(adjacency, root, blocked=None):
    parent = {root: blocked}
    order = [root]
    stack = [root]
    while stack:
        v = stack.pop()
        for w in adjacency[v]:
            if w != parent[v] and w not in parent:
                parent[w] = v
                order.append(w)
                stack.append(w)
    codes: Dict[int, str] = {}
    children: Dict[int, List[int]] = {v: [] for v in order}
    for v in order[1:]:
        children[parent[v]].append(v)
    for v in reversed(order):
        kids = sorted(children[v], key=lambda w: codes[w])
        children[v] = kids
        codes[v] = '(' + ''.join(codes[w] for w in kids) + ')'
    return codes, children

def _preorder(root, children) -> List[int]:
    out = []
    stack = [root]
    while stack:
        v = stack.pop()
        out.append(v)
        stack.extend(reversed(children[v]))
    return out

def _tree_centers(adjacency, vertices: List[int]) -> List[int]:
    if len(vertices) <= 2:
        return list(vertices)
    degree = {v: len(adjacency[v]) for v in vertices}
    layer = [v for v in vertices if degree[v] <= 1]
    remaining = len(vertices)
    while remaining > 2:
        remaining -= len(layer)
        nxt = []
        for v in layer:
            for w in adjacency[v]:
                degree[w] -= 1
                if degree[w] == 1:
                    nxt.append(w)
        layer = nxt
    return layer

def tree_code_and_order(adjacency, vertices: List[int]) -> Tuple[str, List[int]]:
    """Unrooted canonical code of one tree plus its canonical vertex order."""
    centers = _tree_centers(adjacency, vertices)
    if len(centers) == 1:
        codes, children = _rooted_codes(adjacency, centers[0])
        return codes[centers[0]], _preorder(centers[0], children)
    a, b = centers
    codes_a, children_a = _rooted_codes(adjacency, a, b)
    codes_b, children_b = _rooted_codes(adjacency, b, a)
    halves = sorted([(codes_a[a], a, children_a), (codes_b[b], b, children_b)], key=lambda h: h[0])
    code = '[' + halves[0][0] + halves[1][0] + ']'
    order = _preorder(halves[0][1], halves[0][2]) + _preorder(halves[1][1], halves[1][2])
    return code, order

def _forest_labeling(g: Graph) -> List[int]:
    adjacency = g.adjacency
    pieces = []
    for component in connected_components(g):
        code, order = tree_code_and_order(adjacency, component)
        pieces.append((len(component), code, order))
    pieces.sort(key=lambda p: (p[0], p[1]))
    labeling = [0] * g.vertex_count
    position = 0
    for _, _, order in pieces:
        for v in order:
            labeling[v] = position
            position += 1
    return labeling

# refinement and search

def _refine(adjacency, cells: List[List[int]]) -> List[List[int]]:
    while True:
        index = {}
        for i, cell in enumerate(cells):
            for v in cell:
                index[v] = i
        refined = []
        changed = False
        for cell in cells:
            if len(cell) == 1:
                refined.append(cell)
                continue
            groups: Dict[tuple, List[int]] = {}
            for v in cell:
                signature = tuple(sorted(index[w] for w in adjacency[v]))
                groups.setdefault(signature, []).append(v)
            if len(groups) == 1:
                refined.append(cell)
                continue
            changed = True
            for signature in sorted(groups):
                refined.append(groups[signature])
        cells = refined
        if not changed:
            return cells

def _orbit(seeds, generators, n) -> set:
    orbit = set(seeds)
    frontier = list(seeds)
    while frontier:
        v = frontier.pop()
        for gamma in generators:
            w = gamma[v]
            if w not in orbit:
                orbit.add(w)
                frontier.append(w)
    return orbit

class _Search:
    """Backtracking over individualized vertices, keeping the minimal code"""

    def __init__(self, g: Graph):
        self.n = g.vertex_count
        self.adjacency = g.adjacency
        self.edges = g.edges
        self.best_bits = None
        self.best_order = None
        self.automorphisms: List[List[int]] = []
        self.leaves = 0

    def _twins(self, v, w) -> bool:
        return self.adjacency[v] - {w} == self.adjacency[w] - {v}

    def _leaf(self, cells):
        self.leaves += 1
        order = [cell[0] for cell in cells]
        position = [0] * self.n
        for pos, v in enumerate(order):
            position[v] = pos
        bits = _edge_bits(self.n, (normalize_edge(position[u], position[v]) for u, v in self.edges))
        if self.best_bits is None or bits < self.best_bits:
            self.best_bits = bits
            self.best_order = order
        elif bits == self.best_bits:
            gamma = [0] * self.n
            for pos, v in enumerate(order):
                gamma[v] = self.best_order[pos]
            self.automorphisms.append(gamma)

    def visit(self, cells, prefix):
        cells = _refine(self.adjacency, cells)
        if len(cells) == self.n:
            self._leaf(cells)
            return
        target_index = next(i for i, cell in enumerate(cells) if len(cell) > 1)
        target = cells[target_index]
        tried: List[int] = []
        for v in target:
            if any(self._twins(v, w) for w in tried):
                continue
            if tried:
                generators = [gamma for gamma in self.automorphisms
                              if all(gamma[p] == p for p in prefix)]
                if generators and v in _orbit(tried, generators, self.n):
                    continue
            tried.append(v)
            rest = [w for w in target if w != v]
            self.visit(cells[:target_index] + [[v], rest] + cells[target_index + 1:], prefix + [v])

def _search_labeling(g: Graph) -> List[int]:
    n = g.vertex_count
    if n == 0:
        return []
    by_degree: Dict[int, List[int]] = {}
    for v in range(n):
        by_degree.setdefault(len(g.adjacency[v]), []).append(v)
    cells = [by_degree[d] for d in sorted(by_degree)]
    search = _Search(g)
    search.visit(cells, [])
    logger.debug("Canonical search on n=%d explored %d leaves", n, search.leaves)
    labeling = [0] * n
    for pos, v in enumerate(search.best_order):
        labeling[v] = pos
    return labeling
