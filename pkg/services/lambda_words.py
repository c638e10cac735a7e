#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
λ-words: the DNC recursion on paths, cycles and pans read as words.

Internal edges carry the labels 1..s. At every node the smallest label
that is still on an internal edge is acted on with L (delete), M
(dot-contract) or R (leaf-contract); every label passed over because its
edge has been removed or is no longer internal is written as X. Edges keep
their label through contractions (parallel copies keep the smaller one)
and the new leaf-edge of R carries none.
"""

import logging
from typing import Dict, Iterator, List, Tuple

from handlers.exceptions import FormulaDomainError
from models.graph import Edge, Graph, normalize_edge
from models.partition import Partition
from models.reports import LambdaWord
from services import families
from services.graph_ops import (
    component_partition, delete_edge, dot_contract, internal_edges, leaf_contract
)

logger = logging.getLogger(__name__)

Labels = Dict[Edge, int]

FAMILY_NAMES = ('path', 'cycle', 'pan')

def labeled_family(family: str, n: int) -> Tuple[Graph, Labels]:
    """
    Build a family member with its internal edges labeled 1..s.

    Path: (i, i+1) is labeled i for i = 1..n−3.
    Cycle: (i, i+1 mod n) is labeled i+1.
    Pan: the cycle on 0..n−2 labeled as above, the leaf-edge unlabeled.

    Raises:
        FormulaDomainError: For an unknown family or a too small n
    """
    if family == 'path':
        if n < 4:
            raise FormulaDomainError("λ-words on paths need n >= 4")
        return families.path(n), {(i, i + 1): i for i in range(1, n - 2)}
    if family == 'cycle':
        g = families.cycle(n)
        return g, {normalize_edge(i, (i + 1) % n): i + 1 for i in range(n)}
    if family == 'pan':
        g = families.pan(n)
        c = n - 1
        return g, {normalize_edge(i, (i + 1) % c): i + 1 for i in range(c)}
    raise FormulaDomainError("λ-words exist for %s, not %r" % (', '.join(FAMILY_NAMES), family))

def _relabel_after_merge(labels: Labels, a: int, b: int, acted: Edge) -> Labels:
    moved: Labels = {}
    for (x, y), label in labels.items():
        if (x, y) == acted:
            continue
        x, y = (a if x == b else x), (a if y == b else y)
        if x == y:
            continue
        edge = normalize_edge(x, y)
        moved[edge] = min(label, moved.get(edge, label))
    return moved

def _steps(g: Graph, labels: Labels, edge: Edge):
    a, b = edge
    yield 'L', delete_edge(g, edge), {e: l for e, l in labels.items() if e != edge}
    yield 'M', dot_contract(g, edge), _relabel_after_merge(labels, a, b, edge)
    contracted, _ = leaf_contract(g, edge)
    yield 'R', contracted, _relabel_after_merge(labels, a, b, edge)

def iter_lambda_leaves(family: str, n: int) -> Iterator[Tuple[LambdaWord, Partition, int]]:
    """
    Every DNC leaf of the labeled family member.

    Yields:
        Tuple[LambdaWord, Partition, int]: word, leaf partition, sign
    """
    g, labels = labeled_family(family, n)
    s = len(labels)
    stack: List[Tuple[Graph, Labels, str]] = [(g, labels, '')]
    while stack:
        graph, current, word = stack.pop()
        live = internal_edges(graph)
        active = [(label, edge) for edge, label in current.items() if edge in live]
        if not active:
            word = word + 'X' * (s - len(word))
            yield LambdaWord(word), component_partition(graph), (-1) ** word.count('M')
            continue
        label, edge = min(active)
        prefix = word + 'X' * (label - 1 - len(word))
        for letter, child, child_labels in reversed(list(_steps(graph, current, edge))):
            stack.append((child, child_labels, prefix + letter))

def enumerate_lambda_words(family: str, n: int, lam: Partition) -> List[LambdaWord]:
    """All λ-words whose leaf is St_λ, sorted."""
    lam = Partition(lam)
    if lam.size != n:
        raise FormulaDomainError("partition %s is not a partition of %d" % (lam.to_list(), n))
    words = [word for word, leaf, _ in iter_lambda_leaves(family, n) if leaf == lam]
    logger.debug("%s_%d: %d words for %s", family, n, len(words), lam.to_text())
    return sorted(words, key=str)

def count_lambda_words(family: str, n: int, lam: Partition) -> int:
    """Number of λ-words for λ, equal to |c_λ| for paths, cycles and pans."""
    return len(enumerate_lambda_words(family, n, lam))
