#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""Edge-list and graph6 ingestion/emission."""

import logging
from typing import Iterable, Iterator

import networkx as nx

from handlers.exceptions import GraphError, GraphFormatError
from models.graph import Graph

logger = logging.getLogger(__name__)

def parse_edge_list(text: str) -> Graph:
    """
    Parse the plain edge-list format.

    The first non-comment line is ``n <vertex_count>``; every further line
    is a 0-based ``u v`` pair. Blank lines and ``#`` comments are ignored.

    Raises:
        GraphFormatError: On any malformed line
    """
    lines = [line.split('#', 1)[0].strip() for line in text.splitlines()]
    lines = [line for line in lines if line]
    if not lines:
        raise GraphFormatError("empty edge list")
    header = lines[0].split()
    if len(header) != 2 or header[0] != 'n':
        raise GraphFormatError("first line must be 'n <vertex_count>', got %r" % lines[0])
    try:
        vertex_count = int(header[1])
        edges = []
        for line in lines[1:]:
            u, v = (int(x) for x in line.split())
            edges.append((u, v))
    except ValueError as err:
        raise GraphFormatError("bad edge line: %s" % err) from None
    try:
        return Graph.from_edges(vertex_count, edges)
    except GraphError as err:
        raise GraphFormatError(str(err)) from None

def format_edge_list(g: Graph) -> str:
    lines = ['n %d' % g.vertex_count]
    lines.extend('%d %d' % e for e in g.sorted_edges())
    return '\n'.join(lines) + '\n'

def graph_to_networkx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.vertex_count))
    h.add_edges_from(g.edges)
    return h

def graph_from_networkx(h: nx.Graph) -> Graph:
    """Convert with nodes relabeled 0..n-1 in sorted node order."""
    nodes = sorted(h.nodes())
    index = {v: i for i, v in enumerate(nodes)}
    return Graph.from_edges(len(nodes), [(index[u], index[v]) for u, v in h.edges() if u != v])

def parse_graph6(text: str) -> Graph:
    """
    Decode one graph6 string (optional ``>>graph6<<`` header).

    Raises:
        GraphFormatError: If networkx rejects the string
    """
    try:
        data = text.strip().encode('ascii')
        if data.startswith(b'>>graph6<<'):
            data = data[len(b'>>graph6<<'):]
        return graph_from_networkx(nx.from_graph6_bytes(data))
    except (nx.NetworkXError, ValueError, IndexError) as err:
        raise GraphFormatError("bad graph6 string %r: %s" % (text, err)) from None

def format_graph6(g: Graph) -> str:
    return nx.to_graph6_bytes(graph_to_networkx(g), header=False).decode('ascii').strip()

def format_graph6_lines(graphs: Iterable[Graph]) -> Iterator[str]:
    """One graph6 line per graph, produced lazily."""
    return (format_graph6(g) for g in graphs)

def read_graph(text: str) -> Graph:
    """Edge list when the text starts with ``n``, graph6 otherwise."""
    stripped = text.lstrip()
    if not stripped:
        raise GraphFormatError("no graph in the input")
    if stripped.startswith('n ') or stripped.startswith('#'):
        return parse_edge_list(text)
    return parse_graph6(stripped.splitlines()[0])
