#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
Edge operations and vertex classification on Graph values.

Contracting an edge (a, b) with a < b merges b into a; index b is then
reused for the isolated vertex (dot-contraction) or the new leaf
(leaf-contraction), so vertex_count never changes.
"""

from collections import deque
from typing import Dict, FrozenSet, Iterable, List, Sequence, Set, Tuple

from handlers.exceptions import MissingEdgeError
from models.graph import Edge, EdgeRef, Graph, normalize_edge
from models.partition import Partition, sort_concat
from models.unicyclic import VertexClassification

def _require_edge(g: Graph, e) -> Edge:
    u, v = EdgeRef.of(e).endpoints
    if (u, v) not in g.edges:
        raise MissingEdgeError((u, v))
    return (u, v)

def _merge(g: Graph, a: int, b: int) -> Set[Edge]:
    merged = set()
    for x, y in g.edges:
        if x == b:
            x = a
        if y == b:
            y = a
        if x != y:
            merged.add(normalize_edge(x, y))
    return merged

def delete_edge(g: Graph, e) -> Graph:
    """
    G∖e

    Raises:
        MissingEdgeError: If e is not an edge of g
    """
    edge = _require_edge(g, e)
    return Graph.trusted(g.vertex_count, g.edges - {edge})

def dot_contract(g: Graph, e) -> Graph:
    """
    Contract e and add an isolated vertex (it takes the larger endpoint index).

    Raises:
        MissingEdgeError: If e is not an edge of g
    """
    a, b = _require_edge(g, e)
    return Graph.trusted(g.vertex_count, _merge(g, a, b))

def leaf_contract(g: Graph, e) -> Tuple[Graph, EdgeRef]:
    """
    Contract e and hang a new leaf on the merged vertex.

    Returns:
        Tuple[Graph, EdgeRef]: The new graph and its new leaf-edge

    Raises:
        MissingEdgeError: If e is not an edge of g
    """
    a, b = _require_edge(g, e)
    edges = _merge(g, a, b)
    edges.add((a, b))
    return Graph.trusted(g.vertex_count, edges), EdgeRef(a, b)

def internal_edges(g: Graph) -> FrozenSet[Edge]:
    """Edges whose two endpoints both have degree at least 2."""
    adj = g.adjacency
    return frozenset((u, v) for u, v in g.edges if len(adj[u]) > 1 and len(adj[v]) > 1)

def connected_components(g: Graph) -> List[List[int]]:
    """Vertex lists of the components, ordered by smallest vertex."""
    adj = g.adjacency
    seen = [False] * g.vertex_count
    components = []
    for start in range(g.vertex_count):
        if seen[start]:
            continue
        seen[start] = True
        queue = deque([start])
        component = []
        while queue:
            v = queue.popleft()
            component.append(v)
            for w in adj[v]:
                if not seen[w]:
                    seen[w] = True
                    queue.append(w)
        components.append(sorted(component))
    return components

def component_partition(g: Graph) -> Partition:
    return sort_concat(len(c) for c in connected_components(g))

def isolated_count(g: Graph) -> int:
    return sum(1 for nbrs in g.adjacency if not nbrs)

def is_connected(g: Graph) -> bool:
    return g.vertex_count <= 1 or len(connected_components(g)) == 1

def is_forest(g: Graph) -> bool:
    return g.edge_count == g.vertex_count - len(connected_components(g))

def is_unicyclic(g: Graph) -> bool:
    return g.vertex_count >= 3 and g.edge_count == g.vertex_count and is_connected(g)

def degree_sequence(g: Graph) -> Tuple[int, ...]:
    return tuple(sorted(g.degrees(), reverse=True))

def leaf_component_partition(g: Graph) -> Partition:
    """Component sizes of g after every internal edge is deleted."""
    residual = Graph.trusted(g.vertex_count, g.edges - internal_edges(g))
    return component_partition(residual)

def induced_subgraph(g: Graph, vertices: Sequence[int]) -> Graph:
    """Subgraph on the given vertices, relabeled 0..len-1 in the given order."""
    index: Dict[int, int] = {v: i for i, v in enumerate(vertices)}
    edges = set()
    for v in vertices:
        for w in g.adjacency[v]:
            if w in index and index[v] < index[w]:
                edges.add((index[v], index[w]))
    return Graph.trusted(len(vertices), edges)

def relabel(g: Graph, mapping: Sequence[int]) -> Graph:
    """Apply a permutation given as old index -> new index."""
    return Graph.trusted(g.vertex_count, (normalize_edge(mapping[u], mapping[v]) for u, v in g.edges))

def disjoint_union(*graphs: Graph) -> Graph:
    offset = 0
    edges = set()
    for h in graphs:
        edges.update((u + offset, v + offset) for u, v in h.edges)
        offset += h.vertex_count
    return Graph.trusted(offset, edges)

def remove_internal_edges(g: Graph) -> Graph:
    return Graph.trusted(g.vertex_count, g.edges - internal_edges(g))

def classify_vertices(g: Graph, cycle: Iterable[int] = None) -> VertexClassification:
    """
    Leaves (degree 1), internal (degree ≥ 2) and deep vertices.

    Sprouts are filled in only for connected unicyclic graphs: deep cycle
    vertices of degree at least 3.

    Args:
        g (Graph): Any simple graph
        cycle (Iterable[int], optional): Cycle vertices when already known
    """
    adj = g.adjacency
    leaves = frozenset(v for v in range(g.vertex_count) if len(adj[v]) == 1)
    internal = frozenset(v for v in range(g.vertex_count) if len(adj[v]) >= 2)
    deep = frozenset(v for v in internal if not (adj[v] & leaves))
    sprouts = None
    if cycle is None and is_unicyclic(g):
        cycle = cycle_vertices(g)
    if cycle is not None:
        sprouts = frozenset(v for v in cycle if v in deep and len(adj[v]) >= 3)
    return VertexClassification(leaves, internal, deep, sprouts)

def cycle_vertices(g: Graph) -> List[int]:
    """Vertices left after repeatedly stripping degree-1 vertices."""
    degree = [len(n) for n in g.adjacency]
    removed = [False] * g.vertex_count
    queue = deque(v for v in range(g.vertex_count) if degree[v] <= 1)
    while queue:
        v = queue.popleft()
        if removed[v]:
            continue
        removed[v] = True
        for w in g.adjacency[v]:
            if not removed[w]:
                degree[w] -= 1
                if degree[w] == 1:
                    queue.append(w)
    return [v for v in range(g.vertex_count) if not removed[v]]
