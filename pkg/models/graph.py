#!/usr/bin/env python
# -*- coding: utf-8 -*-

from dataclasses import dataclass, field
from functools import cached_property
from typing import FrozenSet, Iterable, List, Tuple

from handlers.exceptions import GraphError, GraphFormatError

Edge = Tuple[int, int]

def normalize_edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)

@dataclass(frozen=True)
class EdgeRef:
    """Unordered pair of vertex indices"""
    u: int
    v: int

    def __post_init__(self):
        if self.u == self.v:
            raise GraphError("an edge needs two distinct endpoints, got %d twice" % self.u)
        if self.u > self.v:
            u, v = self.v, self.u
            object.__setattr__(self, 'u', u)
            object.__setattr__(self, 'v', v)

    @classmethod
    def of(cls, edge) -> 'EdgeRef':
        if isinstance(edge, EdgeRef):
            return edge
        u, v = edge
        return cls(int(u), int(v))

    @property
    def endpoints(self) -> Edge:
        return (self.u, self.v)

    def __iter__(self):
        return iter((self.u, self.v))

@dataclass(frozen=True)
class Graph:
    """
    Simple undirected graph on vertices 0..vertex_count-1.

    Edges are stored as a frozenset of (u, v) pairs with u < v. Values are
    immutable; every edge operation returns a new graph.
    """
    vertex_count: int
    edges: FrozenSet[Edge] = field(default_factory=frozenset)

    def __post_init__(self):
        if self.vertex_count < 0:
            raise GraphError("vertex count must be non-negative, got %d" % self.vertex_count)
        normalized = set()
        for edge in self.edges:
            u, v = (int(x) for x in edge)
            if u == v:
                raise GraphError("self-loop at vertex %d" % u)
            if not (0 <= u < self.vertex_count and 0 <= v < self.vertex_count):
                raise GraphError("edge (%d, %d) outside 0..%d" % (u, v, self.vertex_count - 1))
            normalized.add(normalize_edge(u, v))
        object.__setattr__(self, 'edges', frozenset(normalized))

    @classmethod
    def trusted(cls, vertex_count: int, edges: Iterable[Edge]) -> 'Graph':
        """Build from edges already normalized and in range."""
        graph = object.__new__(cls)
        object.__setattr__(graph, 'vertex_count', vertex_count)
        object.__setattr__(graph, 'edges', frozenset(edges))
        return graph

    @classmethod
    def from_edges(cls, vertex_count: int, edges: Iterable) -> 'Graph':
        return cls(vertex_count, frozenset(tuple(e) for e in edges))

    @cached_property
    def adjacency(self) -> Tuple[FrozenSet[int], ...]:
        neighbours: List[set] = [set() for _ in range(self.vertex_count)]
        for u, v in self.edges:
            neighbours[u].add(v)
            neighbours[v].add(u)
        return tuple(frozenset(s) for s in neighbours)

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def degrees(self) -> List[int]:
        return [len(n) for n in self.adjacency]

    def has_edge(self, edge) -> bool:
        u, v = edge
        return normalize_edge(u, v) in self.edges

    def sorted_edges(self) -> List[Edge]:
        return sorted(self.edges)

    @classmethod
    def from_dict(cls, data) -> 'Graph':
        """
        Create a Graph from a dictionary

        Args:
            data (dict): {"n": vertex count, "edges": [[u, v], ...]}

        Returns:
            Graph: New Graph instance

        Raises:
            GraphFormatError: If the document is malformed
        """
        try:
            return cls.from_edges(int(data['n']), [tuple(e) for e in data.get('edges', [])])
        except (KeyError, TypeError, ValueError) as err:
            raise GraphFormatError("malformed graph document: %s" % err) from None

    def to_dict(self):
        return {'n': self.vertex_count, 'edges': [list(e) for e in self.sorted_edges()]}

    def __repr__(self):
        return 'Graph(n=%d, edges=%s)' % (self.vertex_count, self.sorted_edges())
