#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
Generation of graphs up to isomorphism.

Connected unicyclic graphs are built as cyclic sequences of rooted trees
(one per cycle vertex) and kept only when the sequence is the smallest of
its rotations and reflections, so each isomorphism class is produced once.
"""

import logging
from functools import lru_cache
from itertools import combinations, combinations_with_replacement, product
from typing import Iterator, List, Optional, Tuple

from config.settings import get_int_setting
from handlers.exceptions import EnumerationRangeError
from models.graph import Graph
from models.partition import partitions_of
from services import families
from services.canonical import canonical_form

logger = logging.getLogger(__name__)

# a rooted tree is the sorted tuple of its children's subtrees
RootedTreeShape = Tuple

CONNECTED_MAX_N = 8

@lru_cache(maxsize=None)
def rooted_trees(k: int) -> Tuple[RootedTreeShape, ...]:
    """All rooted trees on k vertices up to isomorphism, sorted."""
    if k < 1:
        return ()
    if k == 1:
        return ((),)
    shapes = set()
    for sizes in partitions_of(k - 1):
        counts = sizes.multiplicities()
        groups = [combinations_with_replacement(rooted_trees(size), counts[size])
                  for size in sorted(counts.m)]
        for choice in product(*groups):
            children = tuple(sorted(child for group in choice for child in group))
            shapes.add(children)
    return tuple(sorted(shapes))

def _compositions(total: int, parts: int) -> Iterator[Tuple[int, ...]]:
    """Ordered sequences of `parts` positive integers summing to total."""
    for cuts in combinations(range(1, total), parts - 1):
        bounds = (0,) + cuts + (total,)
        yield tuple(bounds[i + 1] - bounds[i] for i in range(parts))

def _is_dihedral_minimum(sequence: Tuple[RootedTreeShape, ...]) -> bool:
    c = len(sequence)
    reflected = sequence[::-1]
    for shift in range(c):
        if sequence[shift:] + sequence[:shift] < sequence:
            return False
        if reflected[shift:] + reflected[:shift] < sequence:
            return False
    return True

def _attach(edges: List[Tuple[int, int]], root: int, shape: RootedTreeShape, next_vertex: int) -> int:
    stack = [(root, shape)]
    while stack:
        parent, node = stack.pop()
        for child in node:
            edges.append((parent, next_vertex))
            stack.append((next_vertex, child))
            next_vertex += 1
    return next_vertex

def graph_from_trees(sequence: Tuple[RootedTreeShape, ...]) -> Graph:
    """The unicyclic graph with the given rooted trees around its cycle, in order."""
    c = len(sequence)
    edges = [(i, (i + 1) % c) for i in range(c)]
    next_vertex = c
    for i, shape in enumerate(sequence):
        next_vertex = _attach(edges, i, shape, next_vertex)
    return Graph.from_edges(next_vertex, edges)

def _check_range(n: int, c: Optional[int]):
    max_n = get_int_setting('CSF_ENUM_MAX_N', 14)
    if not 3 <= n <= max_n:
        raise EnumerationRangeError("n must lie in 3..%d, got %d" % (max_n, n))
    if c is not None and not 3 <= c <= n:
        raise EnumerationRangeError("cycle size must lie in 3..%d, got %d" % (n, c))

def enumerate_unicyclic(n: int, c: Optional[int] = None) -> Iterator[Graph]:
    """
    Connected unicyclic graphs on n vertices, one per isomorphism class.

    Args:
        n (int): Vertex count, 3 ≤ n ≤ CSF_ENUM_MAX_N
        c (int, optional): Restrict to one cycle size; all sizes when None

    Yields:
        Graph: Cycle on 0..c−1, tree vertices numbered depth-first after it

    Raises:
        EnumerationRangeError: Outside the supported range
    """
    _check_range(n, c)
    sizes = [c] if c is not None else list(range(3, n + 1))
    logger.info("Enumerating unicyclic graphs n=%d c=%s", n, c if c is not None else 'all')
    for cycle_size in sizes:
        for composition in _compositions(n, cycle_size):
            for sequence in product(*(rooted_trees(k) for k in composition)):
                if _is_dihedral_minimum(sequence):
                    yield graph_from_trees(sequence)

def count_unicyclic(n: int, c: Optional[int] = None) -> int:
    return sum(1 for _ in enumerate_unicyclic(n, c))

def enumerate_unicyclic_slow(n: int) -> List[Graph]:
    """
    Independent generator: C_n plus every one-leaf extension of the
    (n−1)-vertex graphs, deduplicated by canonical code.
    """
    _check_range(n, None)
    if n == 3:
        return [families.cycle(3)]
    seen = {}
    candidates = [families.cycle(n)]
    for g in enumerate_unicyclic_slow(n - 1):
        for v in range(g.vertex_count):
            candidates.append(Graph.trusted(n, g.edges | {(v, n - 1)}))
    for g in candidates:
        seen.setdefault(canonical_form(g), g)
    return [seen[code] for code in sorted(seen)]

def enumerate_connected_graphs(n: int) -> List[Graph]:
    """
    All connected simple graphs on n vertices up to isomorphism.

    Every connected graph has a vertex whose removal keeps it connected,
    so adding a vertex to each (n−1)-vertex graph in every possible way
    reaches all of them.

    Raises:
        EnumerationRangeError: For n < 1 or n > 8
    """
    if not 1 <= n <= CONNECTED_MAX_N:
        raise EnumerationRangeError("connected graphs are generated for 1..%d vertices" % CONNECTED_MAX_N)
    if n == 1:
        return [Graph.trusted(1, frozenset())]
    seen = {}
    for g in enumerate_connected_graphs(n - 1):
        new = n - 1
        for size in range(1, new + 1):
            for neighbours in combinations(range(new), size):
                h = Graph.trusted(n, g.edges | {(v, new) for v in neighbours})
                seen.setdefault(canonical_form(h), h)
    logger.debug("%d connected graphs on %d vertices", len(seen), n)
    return [seen[code] for code in sorted(seen)]
