#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
Structural inference for connected unicyclic graphs from the star expansion alone.

c₍ₙ₎ gives the cycle size, the hook coefficients give (k, r) up to the
single r = 1 versus r = c ambiguity, the leading partition gives the leaf
count and decides whether the graph is a cuttlefish.
"""

import logging
from typing import List, Set, Tuple

from handlers.exceptions import EmptyExpansionError, InconsistentReportError
from models.expansion import StarExpansion, csf_equal
from models.graph import Graph
from models.partition import Partition
from models.reports import StructuralReport
from services.closed_forms import (
    R_CASE_MANY, R_CASE_ONE, cuttlefish_leading, hook_vector,
    num_leaves_from_leading, unicyclic_hook_vector
)
from services.decomposition import unicyclic_decompose
from services.star_engine import get_engine

logger = logging.getLogger(__name__)

RELATION_DISTINCT = 'distinct'
RELATION_EQUAL = 'equal'
RELATION_ONE_VS_C = 'one-vs-c'

__all__ = ['infer', 'csf_equal', 'same_hook_relation', 'kr_candidates']

def _cycle_size(x: StarExpansion) -> int:
    c = x.get((x.n,)) + 1
    if not 3 <= c <= x.n:
        raise InconsistentReportError(
            "c_(n) = %d gives cycle size %d, impossible for n = %d" % (c - 1, c, x.n)
        )
    return c

def _longest_hook(hooks: List[int]) -> int:
    nonzero = [m1 for m1, value in enumerate(hooks) if value]
    if not nonzero:
        raise InconsistentReportError("every hook coefficient is zero")
    return nonzero[-1]

def kr_candidates(n: int, c: int, hooks: List[int]) -> Set[Tuple[int, int]]:
    """
    (k, r) pairs with r ≥ 1 whose hook formula reproduces every hook coefficient.

    Args:
        n (int): Vertex count
        c (int): Cycle size
        hooks (List[int]): Hook coefficients for m1 = 0..n−2
    """
    m = _longest_hook(hooks)
    found = set()
    k = m + 2
    if c <= k <= n and unicyclic_hook_vector(n, c, k, 1) == hooks:
        found.add((k, 1))
    k = m + 1
    if len(hooks) > 1 and c <= k <= n:
        r = 1 - hooks[1] - (c - 1) * (k - 2)
        if 2 <= r <= c and unicyclic_hook_vector(n, c, k, r) == hooks:
            found.add((k, r))
    return found

def infer(x: StarExpansion) -> StructuralReport:
    """
    Read structural data of an unknown connected unicyclic graph off its expansion.

    Args:
        x (StarExpansion): Expansion of a connected unicyclic graph

    Returns:
        StructuralReport: Cycle size, (k, r) and leaf-count candidates, cuttlefish flag

    Raises:
        InconsistentReportError: If no unicyclic graph can have this expansion
    """
    n = x.n
    c = _cycle_size(x)
    hooks = hook_vector(x)
    m = _longest_hook(hooks)
    try:
        lead, lead_coeff = x.leading_term()
    except EmptyExpansionError:
        raise InconsistentReportError("the expansion is empty")

    pure_cycle = c == n
    if pure_cycle:
        if unicyclic_hook_vector(n, c, n, 0) != hooks:
            raise InconsistentReportError("hooks do not match the cycle C_%d" % n)
        candidates = {(n, 0)}
        leaves = {0}
    else:
        candidates = kr_candidates(n, c, hooks)
        if not candidates:
            raise InconsistentReportError("no (k, r) reproduces the hook coefficients %s" % hooks)
        leaves = set()
        for _, r in candidates:
            case = R_CASE_ONE if r == 1 else R_CASE_MANY
            leaves.add(num_leaves_from_leading(lead, case))

    t = n - c
    is_cuttlefish = t >= 1 and lead == cuttlefish_leading(c, t)
    logger.debug("inferred c=%d kr=%s cuttlefish=%s", c, sorted(candidates), is_cuttlefish)
    return StructuralReport(
        n=n,
        cycle_size=c,
        is_pure_cycle=pure_cycle,
        longest_hook_m=m,
        kr_candidates=frozenset(candidates),
        leaf_count_candidates=frozenset(leaves),
        is_cuttlefish=is_cuttlefish,
        hook_coefficients=hooks,
        leading_partition=Partition(lead).to_list(),
        leading_coefficient=lead_coeff,
    )

def same_hook_relation(g: Graph, h: Graph) -> str:
    """
    How two connected unicyclic graphs relate through their hook coefficients.

    Returns:
        str: "distinct" when the hooks differ, "equal" when (k, r) agree,
        "one-vs-c" when one graph has r = 1 and the other r = c

    Raises:
        InconsistentReportError: If equal hooks come from any other (k, r) pairs
    """
    engine = get_engine()
    if hook_vector(engine.star_expand(g)) != hook_vector(engine.star_expand(h)):
        return RELATION_DISTINCT
    a, b = unicyclic_decompose(g), unicyclic_decompose(h)
    if (a.k, a.r) == (b.k, b.r):
        return RELATION_EQUAL
    first, second = sorted([a, b], key=lambda d: d.r)
    if first.r == 1 and second.r == second.c and first.k == second.k + 1:
        return RELATION_ONE_VS_C
    raise InconsistentReportError(
        "equal hooks with (k, r) = (%d, %d) and (%d, %d)" % (a.k, a.r, b.k, b.r)
    )
