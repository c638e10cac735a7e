#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
Star-basis expansion by deletion-near-contraction.

For an internal edge e,

    X_G = X_{G∖e} − X_{(G⊙e)∖ℓ_e} + X_{G⊙e}

and a graph without internal edges is a star forest St_λ, so repeated
application ends in signed star-forest leaves. Connected components are
expanded separately, memoized by canonical code, and multiplied back
together by concatenating partitions.
"""

import logging
import threading
from typing import Dict, Iterator, List, Optional, Tuple

from config.settings import get_bool_setting, get_setting
from handlers.exceptions import CancellationError, UsageError
from models.expansion import DncNodeResult, StarExpansion
from models.graph import Graph, normalize_edge
from models.partition import Partition
from services.canonical import CanonicalCode, canonical_graph, canonical_labeling
from services.graph_ops import (
    component_partition, connected_components, delete_edge, dot_contract,
    induced_subgraph, internal_edges, isolated_count, leaf_contract
)

logger = logging.getLogger(__name__)

Terms = Dict[Tuple[int, ...], int]

def _accumulate(target: Terms, key: Tuple[int, ...], value: int) -> None:
    current = target.get(key)
    if current is None:
        target[key] = value
        return
    if (current > 0) != (value > 0):
        raise CancellationError(
            "contributions %d and %d to %s have opposite signs" % (current, value, key)
        )
    target[key] = current + value

def _multiply(a: Terms, b: Terms) -> Terms:
    result: Terms = {}
    for ka, va in a.items():
        for kb, vb in b.items():
            key = tuple(sorted(ka + kb, reverse=True)) if ka and kb else (ka or kb)
            _accumulate(result, key, va * vb)
    return result

def _append_ones(terms: Terms, ones: int) -> Terms:
    if not ones:
        return terms
    tail = (1,) * ones
    return {key + tail: value for key, value in terms.items()}

class StarEngine:
    """Memoizing star-expansion engine"""

    POLICY_CANONICAL = 'canonical'
    POLICY_LOWEST = 'lowest'
    POLICY_HIGHEST = 'highest'
    POLICIES = (POLICY_CANONICAL, POLICY_LOWEST, POLICY_HIGHEST)

    def __init__(self, policy: str = POLICY_CANONICAL, memoize: bool = True):
        """
        Args:
            policy (str): Internal-edge selection rule at each DNC node
            memoize (bool): Reuse expansions of isomorphic components

        Raises:
            UsageError: For an unknown policy name
        """
        if policy not in self.POLICIES:
            raise UsageError("unknown edge policy %r" % policy)
        self.logger = logging.getLogger(__name__)
        self.policy = policy
        self.memoize = memoize
        self._memo: Dict[CanonicalCode, Terms] = {}
        self._lock = threading.Lock()
        self.hits = 0
        self.misses = 0

    def _pick(self, graph: Graph, edges, canonical_labels: bool = False):
        """
        Choose the internal edge to split on.

        The canonical policy takes the smallest edge under the canonical
        labeling, so isomorphic graphs get edges in the same automorphism orbit.
        """
        if self.policy == self.POLICY_HIGHEST:
            return max(edges)
        if self.policy == self.POLICY_LOWEST or canonical_labels:
            return min(edges)
        labels = canonical_labeling(graph)
        return min(edges, key=lambda e: normalize_edge(labels[e[0]], labels[e[1]]))

    def clear_cache(self):
        with self._lock:
            self._memo.clear()
        self.hits = self.misses = 0

    @property
    def cache_size(self) -> int:
        return len(self._memo)

    def star_expand(self, g: Graph) -> StarExpansion:
        """
        Exact star-basis expansion of X_g.

        Args:
            g (Graph): Any simple graph

        Returns:
            StarExpansion: Coefficients keyed by partitions of |V(g)|
        """
        if not self.memoize:
            return self.expand_by_leaves(g)
        terms: Terms = {(): 1}
        ones = 0
        for component in connected_components(g):
            if len(component) == 1:
                ones += 1
                continue
            sub = induced_subgraph(g, component)
            terms = _multiply(terms, self._expand_connected(sub))
        terms = _append_ones(terms, ones)
        self.logger.debug("Expanded n=%d: %d terms, memo %d entries (%d hits, %d misses)",
                          g.vertex_count, len(terms), len(self._memo), self.hits, self.misses)
        return StarExpansion(g.vertex_count, terms)

    def leading_term(self, g: Graph) -> Tuple[Partition, int]:
        return self.star_expand(g).leading_term()

    def _children(self, graph: Graph, pending: Dict) -> List[Tuple[int, List[CanonicalCode], int]]:
        e = self._pick(graph, internal_edges(graph), canonical_labels=True)
        plan = []
        for sign, child in ((1, delete_edge(graph, e)),
                            (-1, dot_contract(graph, e)),
                            (1, leaf_contract(graph, e)[0])):
            keys = []
            ones = 0
            for component in connected_components(child):
                if len(component) == 1:
                    ones += 1
                    continue
                canon, code = canonical_graph(induced_subgraph(child, component))
                keys.append(code)
                if code not in self._memo and code not in pending:
                    pending[code] = [canon, None]
            plan.append((sign, keys, ones))
        return plan

    def _expand_connected(self, h: Graph) -> Terms:
        canon, root = canonical_graph(h)
        cached = self._memo.get(root)
        if cached is not None:
            self.hits += 1
            return cached

        pending: Dict[CanonicalCode, list] = {root: [canon, None]}
        stack = [root]
        while stack:
            code = stack[-1]
            if code in self._memo:
                self.hits += 1
                stack.pop()
                continue
            entry = pending[code]
            graph, plan = entry
            if plan is None:
                if not internal_edges(graph):
                    self._store(code, {(graph.vertex_count,): 1})
                    stack.pop()
                    del pending[code]
                    continue
                plan = entry[1] = self._children(graph, pending)
            missing = [k for _, keys, _ in plan for k in keys if k not in self._memo]
            if missing:
                stack.extend(dict.fromkeys(missing))
                continue
            terms: Terms = {}
            for sign, keys, ones in plan:
                part: Terms = {(): sign}
                for k in keys:
                    part = _multiply(part, self._memo[k])
                for key, value in _append_ones(part, ones).items():
                    _accumulate(terms, key, value)
            self._store(code, terms)
            stack.pop()
            del pending[code]
        return self._memo[root]

    def _store(self, code: CanonicalCode, terms: Terms):
        self.misses += 1
        with self._lock:
            self._memo[code] = terms

    def iter_dnc_leaves(self, g: Graph) -> Iterator[DncNodeResult]:
        """
        Walk the full DNC tree of g without memoization.

        Yields:
            DncNodeResult: The star forest partition and sign of each leaf
        """
        base = isolated_count(g)
        stack = [g]
        while stack:
            h = stack.pop()
            edges = internal_edges(h)
            if not edges:
                sign = -1 if (isolated_count(h) - base) % 2 else 1
                yield DncNodeResult(component_partition(h), sign)
                continue
            e = self._pick(h, edges)
            stack.append(leaf_contract(h, e)[0])
            stack.append(dot_contract(h, e))
            stack.append(delete_edge(h, e))

    def expand_by_leaves(self, g: Graph) -> StarExpansion:
        """Sum the DNC leaves directly, checking that no partition sees both signs."""
        terms: Terms = {}
        for leaf in self.iter_dnc_leaves(g):
            _accumulate(terms, tuple(leaf.partition), leaf.sign)
        return StarExpansion(g.vertex_count, terms)

_shared_engine: Optional[StarEngine] = None

def get_engine() -> StarEngine:
    """The process-wide engine configured from CSF_EDGE_POLICY and CSF_MEMO_ENABLED."""
    global _shared_engine
    if _shared_engine is None:
        _shared_engine = StarEngine(
            policy=get_setting('CSF_EDGE_POLICY', StarEngine.POLICY_CANONICAL),
            memoize=get_bool_setting('CSF_MEMO_ENABLED', True),
        )
        logger.info("Star engine created (policy=%s, memoize=%s)",
                    _shared_engine.policy, _shared_engine.memoize)
    return _shared_engine

def star_expand(g: Graph) -> StarExpansion:
    return get_engine().star_expand(g)
