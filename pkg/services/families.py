#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""Builders for the named graph families and the worked example graphs."""

from typing import Callable, Dict, Iterable, List, Sequence, Tuple

from handlers.exceptions import FormulaDomainError, UsageError
from models.graph import Graph

def _cycle_edges(vertices: Sequence[int]) -> List[Tuple[int, int]]:
    return [(vertices[i], vertices[(i + 1) % len(vertices)]) for i in range(len(vertices))]

def _require(condition: bool, message: str):
    if not condition:
        raise FormulaDomainError(message)

def path(n: int) -> Graph:
    _require(n >= 1, "a path needs at least one vertex")
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])

def cycle(n: int) -> Graph:
    _require(n >= 3, "a cycle needs at least three vertices")
    return Graph.from_edges(n, _cycle_edges(list(range(n))))

def star(k: int) -> Graph:
    """St_k: one center (vertex 0) and k-1 leaves."""
    _require(k >= 1, "a star needs at least one vertex")
    return Graph.from_edges(k, [(0, i) for i in range(1, k)])

def squid(c: int, tentacles: Iterable[int]) -> Graph:
    """Cycle on 0..c-1 with paths of the given lengths hanging from vertex 0."""
    _require(c >= 3, "cycle size must be at least 3")
    edges = _cycle_edges(list(range(c)))
    n = c
    for length in tentacles:
        _require(length >= 1, "tentacle lengths must be positive")
        previous = 0
        for _ in range(length):
            edges.append((previous, n))
            previous = n
            n += 1
    return Graph.from_edges(n, edges)

def pan(n: int) -> Graph:
    """C_{n-1} on 0..n-2 plus the leaf n-1 attached to vertex 0."""
    _require(n >= 4, "a pan needs at least four vertices")
    return squid(n - 1, [1])

def cuttlefish(c: int, t: int) -> Graph:
    """C_{c,t}: a c-cycle with t leaves on one vertex."""
    _require(t >= 1, "a cuttlefish needs at least one leaf")
    return squid(c, [1] * t)

def tadpole(c: int, ell: int) -> Graph:
    return squid(c, [ell])

def paw() -> Graph:
    return pan(4)

def bicyclic_type1(s: int, t: int, ell: int) -> Graph:
    """
    Cycles C_s and C_t joined by a path on ell vertices.

    ell = 1 means the two cycles share one vertex.
    """
    _require(s >= 3 and t >= 3, "cycle sizes must be at least 3")
    _require(ell >= 1, "the connecting path needs at least one vertex")
    edges = _cycle_edges(list(range(s)))
    n = s
    end = 0
    for _ in range(ell - 1):
        edges.append((end, n))
        end = n
        n += 1
    second = [end] + list(range(n, n + t - 1))
    n += t - 1
    edges.extend(_cycle_edges(second))
    return Graph.from_edges(n, edges)

def bicyclic_type2(s: int, t: int, ell: int) -> Graph:
    """
    Cycles C_s and C_t sharing a path with ell edges (a theta graph).

    Raises:
        FormulaDomainError: If a branch would be empty or two branches are single edges
    """
    branches = [ell, s - ell, t - ell]
    _require(all(b >= 1 for b in branches), "theta branches must have at least one edge")
    _require(sum(1 for b in branches if b == 1) <= 1, "two single-edge branches make a multi-edge")
    edges = []
    n = 2
    for length in branches:
        previous = 0
        for _ in range(length - 1):
            edges.append((previous, n))
            previous = n
            n += 1
        edges.append((previous, 1))
    return Graph.from_edges(n, edges)

def bicyclic(shape: str, s: int, t: int, ell: int) -> Graph:
    if shape.lower() in ('typei', 'type1', 'i'):
        return bicyclic_type1(s, t, ell)
    if shape.lower() in ('typeii', 'type2', 'ii'):
        return bicyclic_type2(s, t, ell)
    raise UsageError("unknown bicyclic shape %r" % shape)

# worked examples

def _labeled(names: Sequence[str], edges: Iterable[Tuple[str, str]]) -> Graph:
    index = {name: i for i, name in enumerate(names)}
    return Graph.from_edges(len(names), [(index[a], index[b]) for a, b in edges])

def triangle_with_tree() -> Graph:
    """Triangle v1v2v3 with a claw v1-t1, t1-t2, t1-t3 (six vertices)."""
    return _labeled(
        ['v1', 'v2', 'v3', 't1', 't2', 't3'],
        [('v1', 'v2'), ('v2', 'v3'), ('v3', 'v1'), ('v1', 't1'), ('t1', 't2'), ('t1', 't3')],
    )

def four_cycle_fourteen() -> Graph:
    """14 vertices on a 4-cycle; k=7, r=3, one sprout."""
    names = ['v%d' % i for i in range(1, 15)]
    return _labeled(names, [
        ('v1', 'v2'), ('v2', 'v3'), ('v3', 'v4'), ('v4', 'v1'),
        ('v1', 'v7'), ('v1', 'v5'), ('v5', 'v6'), ('v5', 'v10'),
        ('v2', 'v9'), ('v2', 'v8'), ('v3', 'v11'), ('v11', 'v12'),
        ('v12', 'v14'), ('v12', 'v13'),
    ])

def four_cycle_nineteen() -> Graph:
    """19 vertices on a 4-cycle with λ = (3,2,1,2) and μ = (3,2,3,1,2)."""
    names = ['V1', 'V2', 'V3', 'V4'] + ['t%d' % i for i in range(1, 16)]
    return _labeled(names, [
        ('V1', 'V2'), ('V2', 'V3'), ('V3', 'V4'), ('V4', 'V1'),
        ('t12', 'V1'), ('t13', 'V1'), ('V1', 't3'), ('t3', 't4'), ('t5', 't3'),
        ('V4', 't9'), ('V4', 't1'), ('t1', 't2'),
        ('V2', 't6'), ('V2', 't7'), ('t7', 't8'),
        ('V3', 't10'), ('t10', 't11'), ('t11', 't14'), ('t11', 't15'),
    ])

def six_vertex_forest() -> Graph:
    """Forest with leaf-component partition (3,2,1)."""
    return _labeled(
        ['t1', 't2', 't3', 'V1', 'V2', 'V3'],
        [('t3', 't1'), ('t2', 't1'), ('t1', 'V1'), ('V1', 'V3')],
    )

def same_hooks_r4() -> Graph:
    """4-cycle with one pendant at every vertex (k=4, r=4)."""
    return Graph.from_edges(8, _cycle_edges([0, 1, 2, 3]) + [(i, i + 4) for i in range(4)])

def same_hooks_r1() -> Graph:
    """4-cycle with a three-leaf claw hanging from one vertex (k=5, r=1)."""
    names = ['A%d' % i for i in range(8)]
    return _labeled(names, [
        ('A1', 'A2'), ('A2', 'A3'), ('A3', 'A0'), ('A0', 'A1'),
        ('A3', 'A4'), ('A4', 'A5'), ('A4', 'A6'), ('A4', 'A7'),
    ])

_SQUARE = [('A1', 'A2'), ('A2', 'A3'), ('A3', 'A0'), ('A0', 'A1')]

def collision_12_first() -> Graph:
    names = ['A%d' % i for i in (0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 12)]
    return _labeled(names, _SQUARE + [
        ('A3', 'A5'), ('A1', 'A9'), ('A9', 'A10'), ('A9', 'A7'), ('A7', 'A8'),
        ('A2', 'A6'), ('A2', 'A4'), ('A4', 'A12'),
    ])

def collision_12_second() -> Graph:
    names = ['A%d' % i for i in (0, 1, 2, 3, 5, 6, 7, 8, 9, 10, 11, 12)]
    return _labeled(names, _SQUARE + [
        ('A1', 'A11'), ('A3', 'A5'), ('A5', 'A12'), ('A1', 'A9'), ('A9', 'A10'),
        ('A9', 'A7'), ('A7', 'A8'), ('A2', 'A6'),
    ])

def collision_13_first() -> Graph:
    names = ['A%d' % i for i in range(13)]
    return _labeled(names, _SQUARE + [
        ('A3', 'A5'), ('A1', 'A10'), ('A10', 'A11'), ('A7', 'A8'), ('A8', 'A9'),
        ('A1', 'A6'), ('A2', 'A4'), ('A4', 'A7'), ('A7', 'A12'),
    ])

def collision_13_second() -> Graph:
    names = ['A%d' % i for i in range(13)]
    return _labeled(names, _SQUARE + [
        ('A1', 'A5'), ('A0', 'A10'), ('A10', 'A11'), ('A7', 'A8'), ('A8', 'A9'),
        ('A3', 'A6'), ('A2', 'A4'), ('A4', 'A7'), ('A7', 'A12'),
    ])

# name -> (builder, parameter names)
FAMILIES: Dict[str, Tuple[Callable[..., Graph], Tuple[str, ...]]] = {
    'path': (path, ('n',)),
    'cycle': (cycle, ('n',)),
    'star': (star, ('n',)),
    'pan': (pan, ('n',)),
    'paw': (paw, ()),
    'cuttlefish': (cuttlefish, ('c', 't')),
    'tadpole': (tadpole, ('c', 'ell')),
    'squid': (squid, ('c', 'tentacles')),
    'bicyclic': (bicyclic, ('shape', 's', 't', 'ell')),
    'triangle-with-tree': (triangle_with_tree, ()),
    'four-cycle-14': (four_cycle_fourteen, ()),
    'four-cycle-19': (four_cycle_nineteen, ()),
    'forest-6': (six_vertex_forest, ()),
    'same-hooks-r4': (same_hooks_r4, ()),
    'same-hooks-r1': (same_hooks_r1, ()),
    'collision-12a': (collision_12_first, ()),
    'collision-12b': (collision_12_second, ()),
    'collision-13a': (collision_13_first, ()),
    'collision-13b': (collision_13_second, ()),
}

def build_family(name: str, **params) -> Graph:
    """
    Build a named family member from keyword parameters.

    Raises:
        UsageError: For an unknown family or a missing parameter
    """
    if name not in FAMILIES:
        raise UsageError("unknown family %r (known: %s)" % (name, ', '.join(sorted(FAMILIES))))
    builder, names = FAMILIES[name]
    missing = [p for p in names if params.get(p) is None]
    if missing:
        raise UsageError("family %s needs %s" % (name, ', '.join('--' + p for p in missing)))
    return builder(*(params[p] for p in names))
