#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
Exhaustive search for non-isomorphic unicyclic graphs with equal CSF.

Graphs are grouped by a hash of their canonical expansion JSON; every
group is confirmed by exact expansion equality before it is reported.
Expansions are cached on disk by canonical code.
"""

import json
import logging
from dataclasses import dataclass
from typing import Dict, List, Optional

from handlers.exceptions import VerificationError
from models.expansion import StarExpansion
from models.graph import Graph
from models.reports import CollisionClass, CollisionReport
from services.canonical import canonical_graph, code_hex
from services.enumeration import enumerate_unicyclic
from services.fingerprint_store import FingerprintStore
from services.graph_io import format_graph6
from utils.file_utils import calculate_text_hash
from workers.expansion_worker import ExpansionWorker

logger = logging.getLogger(__name__)

@dataclass
class FingerprintedGraph:
    """A canonical representative with its expansion"""
    graph: Graph
    code: str
    graph6: str
    fingerprint: str
    expansion_json: str

    @property
    def expansion(self) -> StarExpansion:
        return StarExpansion.from_dict(json.loads(self.expansion_json))

def fingerprint_unicyclic(n: int, c: Optional[int] = None, jobs: Optional[int] = None,
                          store: Optional[FingerprintStore] = None,
                          progress: bool = False) -> List[FingerprintedGraph]:
    """
    Expand every connected unicyclic graph on n vertices (cycle size c).

    Args:
        n (int): Vertex count
        c (int, optional): Cycle size, all sizes when None
        jobs (int, optional): Worker processes
        store (FingerprintStore, optional): Cache; nothing is cached when None
        progress (bool): Show a progress bar on stderr

    Returns:
        List[FingerprintedGraph]: Sorted by canonical code
    """
    canon = []
    for g in enumerate_unicyclic(n, c):
        cg, code = canonical_graph(g)
        canon.append((code_hex(code), cg))
    canon.sort(key=lambda item: item[0])

    cached: Dict[str, tuple] = store.lookup(code for code, _ in canon) if store else {}
    missing = [(code, cg) for code, cg in canon if code not in cached]
    logger.info("n=%d c=%s: %d graphs, %d cached", n, c, len(canon), len(canon) - len(missing))

    worker = ExpansionWorker(jobs=jobs, progress=progress, description='n=%d c=%s' % (n, c))
    computed = worker.run(format_graph6(cg) for _, cg in missing)
    fresh = []
    for (code, cg), text in zip(missing, computed):
        fingerprint = calculate_text_hash(text)
        cached[code] = (fingerprint, text)
        fresh.append((code, n, c, fingerprint, text))
    if store:
        store.save(fresh)

    return [
        FingerprintedGraph(cg, code, format_graph6(cg), cached[code][0], cached[code][1])
        for code, cg in canon
    ]

def group_equal(entries: List[FingerprintedGraph]) -> List[List[FingerprintedGraph]]:
    """
    CSF-equivalence classes of size at least two, confirmed by exact equality.

    Raises:
        VerificationError: If a fingerprint class holds unequal expansions
            that nevertheless serialize identically
    """
    buckets: Dict[str, List[FingerprintedGraph]] = {}
    for entry in entries:
        buckets.setdefault(entry.fingerprint, []).append(entry)
    classes = []
    for bucket in buckets.values():
        if len(bucket) < 2:
            continue
        # split hash collisions by exact text, then double-check as maps
        by_text: Dict[str, List[FingerprintedGraph]] = {}
        for entry in bucket:
            by_text.setdefault(entry.expansion_json, []).append(entry)
        for group in by_text.values():
            if len(group) < 2:
                continue
            first = group[0].expansion
            if any(other.expansion != first for other in group[1:]):
                raise VerificationError("expansions with equal JSON differ as maps")
            classes.append(sorted(group, key=lambda e: e.graph6))
    classes.sort(key=lambda group: [e.graph6 for e in group])
    return classes

def collision_search(n: int, c: Optional[int], jobs: Optional[int] = None,
                     store: Optional[FingerprintStore] = None,
                     progress: bool = False) -> CollisionReport:
    """
    Every class of non-isomorphic connected unicyclic graphs sharing one CSF.

    Returns:
        CollisionReport: Classes sorted by their graph6 lists; independent of jobs
    """
    entries = fingerprint_unicyclic(n, c, jobs=jobs, store=store, progress=progress)
    classes = [
        CollisionClass(
            expansion_ref=group[0].fingerprint,
            graphs=[e.graph6 for e in group],
            codes=[e.code for e in group],
        )
        for group in group_equal(entries)
    ]
    report = CollisionReport(n=n, c=c, graph_count=len(entries), classes=classes)
    logger.info("n=%d c=%s: %d classes, %d pairs", n, c, len(classes), report.pair_count)
    return report
