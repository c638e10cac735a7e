#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
Independent CSF computation in the power-sum basis.

X_G = Σ_{S ⊆ E} (−1)^{|S|} p_{λ(S)}, converted to the star basis by an exact LU solve over QQ against the power-sum expansions of star products.
"""

import logging
from functools import lru_cache
from typing import Dict, List, Tuple

from sympy import QQ
from sympy.polys.matrices import DomainMatrix

from config.settings import get_int_setting
from handlers.exceptions import NonIntegralSolutionError, OracleTooLargeError, UsageError
from models.expansion import PowerSumExpansion, StarExpansion
from models.graph import Graph
from models.partition import Partition, partitions_of
from services.star_engine import StarEngine, get_engine
from utils.combinatorics import binomial, sign

logger = logging.getLogger(__name__)

METHOD_SUBSETS = 'subsets'
METHOD_BLOCKS = 'blocks'

def csf_power_sum(g: Graph, method: str = METHOD_SUBSETS, max_edges: int = None) -> PowerSumExpansion:
    """
    Power-sum expansion of X_g.

    Args:
        g (Graph): Any simple graph
        method (str): "subsets" walks every edge subset; "blocks" sums over
            vertex set partitions weighted by signed connected spanning counts
        max_edges (int, optional): Guard for "subsets", CSF_ORACLE_MAX_EDGES by default

    Returns:
        PowerSumExpansion: Exact coefficients

    Raises:
        OracleTooLargeError: If "subsets" is asked for more edges than the guard
    """
    if method == METHOD_BLOCKS:
        return _power_sum_blocks(g)
    if method != METHOD_SUBSETS:
        raise UsageError("unknown oracle method %r" % method)
    if max_edges is None:
        max_edges = get_int_setting('CSF_ORACLE_MAX_EDGES', 24)
    if g.edge_count > max_edges:
        raise OracleTooLargeError(
            "%d edges exceed the edge-subset guard of %d" % (g.edge_count, max_edges)
        )
    return _power_sum_subsets(g)

def _power_sum_subsets(g: Graph) -> PowerSumExpansion:
    edges = g.sorted_edges()
    n = g.vertex_count
    terms: Dict[Tuple[int, ...], int] = {}
    # depth-first over include/exclude, carrying component labels
    stack = [(0, list(range(n)), 0)]
    while stack:
        index, label, size = stack.pop()
        if index == len(edges):
            counts: Dict[int, int] = {}
            for root in label:
                counts[root] = counts.get(root, 0) + 1
            key = tuple(sorted(counts.values(), reverse=True))
            terms[key] = terms.get(key, 0) + sign(size)
            continue
        stack.append((index + 1, label, size))
        u, v = edges[index]
        a, b = label[u], label[v]
        if a == b:
            stack.append((index + 1, label, size + 1))
        else:
            merged = [a if x == b else x for x in label]
            stack.append((index + 1, merged, size + 1))
    return PowerSumExpansion(n, terms)

def _power_sum_blocks(g: Graph) -> PowerSumExpansion:
    n = g.vertex_count
    if n == 0:
        return PowerSumExpansion(0, {(): 1})
    neighbour_mask = [0] * n
    for u, v in g.edges:
        neighbour_mask[u] |= 1 << v
        neighbour_mask[v] |= 1 << u

    def has_edge_inside(mask):
        m = mask
        while m:
            low = m & -m
            if neighbour_mask[low.bit_length() - 1] & mask:
                return True
            m ^= low
        return False

    # connected[mask] = signed count of connected spanning edge sets on mask
    full = (1 << n) - 1
    connected: Dict[int, int] = {}
    for mask in range(1, full + 1):
        low = mask & -mask
        total = 0 if has_edge_inside(mask) else 1
        rest = mask ^ low
        sub = rest
        while True:
            # proper blocks containing the lowest vertex
            block = sub | low
            if block != mask:
                f = connected.get(block, 0)
                if f and not has_edge_inside(mask ^ block):
                    total -= f
            if sub == 0:
                break
            sub = (sub - 1) & rest
        connected[mask] = total

    @lru_cache(maxsize=None)
    def spread(mask) -> Tuple[Tuple[Tuple[int, ...], int], ...]:
        if mask == 0:
            return (((), 1),)
        low = mask & -mask
        rest = mask ^ low
        result: Dict[Tuple[int, ...], int] = {}
        sub = rest
        while True:
            block = sub | low
            f = connected.get(block, 0)
            if f:
                size = bin(block).count('1')
                for key, value in spread(mask ^ block):
                    new_key = tuple(sorted(key + (size,), reverse=True))
                    result[new_key] = result.get(new_key, 0) + f * value
            if sub == 0:
                break
            sub = (sub - 1) & rest
        return tuple(result.items())

    return PowerSumExpansion(n, dict(spread(full)))

def star_in_power_sum(k: int) -> PowerSumExpansion:
    """st_k = Σ_j (−1)^j C(k−1, j) p_{(j+1, 1^{k−1−j})}."""
    if k < 1:
        raise UsageError("star size must be positive, got %d" % k)
    terms = {(j + 1,) + (1,) * (k - 1 - j): sign(j) * binomial(k - 1, j) for j in range(k)}
    return PowerSumExpansion(k, terms)

def power_sum_product(a: PowerSumExpansion, b: PowerSumExpansion) -> PowerSumExpansion:
    """Product in the power-sum basis: p_λ · p_μ = p_{λ·μ}."""
    return a.product(b)

@lru_cache(maxsize=None)
def _star_column(parts: Tuple[int, ...]) -> Tuple[Tuple[Tuple[int, ...], int], ...]:
    expansion = PowerSumExpansion(0, {(): 1})
    for part in parts:
        expansion = power_sum_product(expansion, star_in_power_sum(part))
    return tuple((tuple(k), v) for k, v in expansion.coeffs.items())

def to_star_basis(x: PowerSumExpansion) -> StarExpansion:
    """
    Solve Σ_λ c_λ · st_λ = x for the star coefficients.

    Raises:
        NonIntegralSolutionError: If the system is singular or a coefficient is fractional
    """
    basis: List[Partition] = list(partitions_of(x.n))
    row_of = {tuple(p): i for i, p in enumerate(basis)}
    size = len(basis)
    rows = [[QQ(0)] * size for _ in range(size)]
    for col, lam in enumerate(basis):
        for key, value in _star_column(tuple(lam)):
            rows[row_of[key]][col] = QQ(value)
    rhs = [[QQ(0)] for _ in range(size)]
    for key, value in x.coeffs.items():
        rhs[row_of[tuple(key)]][0] = QQ(value)
    matrix = DomainMatrix(rows, (size, size), QQ)
    rank = matrix.rank()
    if rank != size:
        raise NonIntegralSolutionError("basis-change matrix has rank %d < %d" % (rank, size))
    solution = matrix.lu_solve(DomainMatrix(rhs, (size, 1), QQ)).to_Matrix()
    terms = {}
    for lam, value in zip(basis, solution):
        if not value.is_integer:
            raise NonIntegralSolutionError("coefficient of %s is %s" % (lam.to_list(), value))
        if value:
            terms[tuple(lam)] = int(value)
    return StarExpansion(x.n, terms)

def oracle_star_expansion(g: Graph, method: str = METHOD_SUBSETS) -> StarExpansion:
    return to_star_basis(csf_power_sum(g, method))

def oracle_check(g: Graph, method: str = METHOD_SUBSETS,
                 engine: StarEngine = None) -> Tuple[StarExpansion, StarExpansion, bool]:
    """
    Compare the DNC engine with the power-sum route on one graph.

    Returns:
        Tuple[StarExpansion, StarExpansion, bool]: (engine, oracle, equal)
    """
    engine = engine or get_engine()
    expected = engine.star_expand(g)
    actual = oracle_star_expansion(g, method)
    equal = expected == actual
    if not equal:
        logger.warning("oracle mismatch on %s", g.to_dict())
    return expected, actual, equal
