#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
Exhaustive re-verification of the closed forms and inference results.

Every connected unicyclic graph up to n_max vertices is expanded once; the
per-graph checks compare formulas with the engine, the per-class checks
look at every set of non-isomorphic graphs sharing one expansion.
Graphs are visited by increasing n and canonical code, so the first
recorded failure of each check is a smallest counterexample.
"""

import logging
from dataclasses import dataclass
from functools import cached_property
from typing import Callable, Dict, List, Optional

from config.settings import get_int_setting
from handlers.exceptions import CsfError, EnumerationRangeError, FormulaDomainError
from models.expansion import StarExpansion
from models.graph import Graph
from models.reports import CheckOutcome, TheoremReport
from models.unicyclic import UnicyclicDecomposition
from services import families
from services.closed_forms import (
    R_CASE_MANY, R_CASE_ONE, bicyclic_cn, cycle_csf, hook_vector, longest_hook,
    num_leaves_from_leading, pan_csf, path_csf, predict_leading_term,
    unicyclic_hook_vector
)
from services.collision_service import fingerprint_unicyclic, group_equal
from services.decomposition import unicyclic_decompose
from services.fingerprint_store import FingerprintStore
from services.graph_ops import degree_sequence
from services.inference import infer
from services.star_engine import get_engine

logger = logging.getLogger(__name__)

@dataclass
class GraphSample:
    """One enumerated graph with its expansion"""
    graph: Graph
    graph6: str
    expansion: StarExpansion

    @property
    def n(self) -> int:
        return self.graph.vertex_count

    @cached_property
    def decomposition(self) -> UnicyclicDecomposition:
        return unicyclic_decompose(self.graph)

    def witness(self) -> Dict:
        return {'n': self.n, 'graph6': self.graph6, 'edges': self.graph.to_dict()['edges']}

GraphCheck = Callable[[GraphSample], bool]
ClassCheck = Callable[[List[GraphSample]], bool]

def leaf_count(g: Graph) -> int:
    return sum(1 for d in g.degrees() if d == 1)

def is_cuttlefish_graph(d: UnicyclicDecomposition) -> bool:
    """Exactly one non-trivial tree, and it consists of leaves on its root."""
    return d.r == 1 and not d.mu

# per-graph checks

def check_hook_formula(sample: GraphSample) -> bool:
    d = sample.decomposition
    return hook_vector(sample.expansion) == unicyclic_hook_vector(d.n, d.c, d.k, d.r)

def check_longest_hook(sample: GraphSample) -> bool:
    d = sample.decomposition
    hooks = hook_vector(sample.expansion)
    m1, value = longest_hook(d.c, d.k, d.r)
    return hooks[m1] == value and not any(hooks[m1 + 1:])

def check_leading_term(sample: GraphSample) -> bool:
    return predict_leading_term(sample.graph) == sample.expansion.leading_term()

def check_leaf_count(sample: GraphSample) -> bool:
    d = sample.decomposition
    if d.r == 0:
        return True
    lead, _ = sample.expansion.leading_term()
    case = R_CASE_ONE if d.r == 1 else R_CASE_MANY
    return num_leaves_from_leading(lead, case) == leaf_count(sample.graph)

def check_inference(sample: GraphSample) -> bool:
    d = sample.decomposition
    report = infer(sample.expansion)
    if report.cycle_size != d.c or (d.k, d.r) not in report.kr_candidates:
        return False
    if 1 < d.r < d.c and len(report.kr_candidates) != 1:
        return False
    if len(report.kr_candidates) == 2:
        (k1, r1), (k2, r2) = sorted(report.kr_candidates, key=lambda kr: kr[1])
        if (r1, r2) != (1, d.c) or k1 != k2 + 1:
            return False
    if leaf_count(sample.graph) not in report.leaf_count_candidates:
        return False
    return report.is_cuttlefish == is_cuttlefish_graph(d)

# per-class checks

def check_same_cycle_size(group: List[GraphSample]) -> bool:
    return len({s.decomposition.c for s in group}) == 1

def check_same_k_same_r(group: List[GraphSample]) -> bool:
    for i, a in enumerate(group):
        for b in group[i + 1:]:
            da, db = a.decomposition, b.decomposition
            if da.k == db.k and da.r != db.r:
                return False
    return True

def check_conjecture(group: List[GraphSample]) -> bool:
    """Degree sequence, r and k agree inside a class with c ≥ 4, or c = 3 and n odd."""
    d = group[0].decomposition
    if d.c < 4 and not (d.c == 3 and d.n % 2):
        return True
    first = group[0]
    signature = (degree_sequence(first.graph), d.r, d.k)
    return all((degree_sequence(s.graph), s.decomposition.r, s.decomposition.k) == signature
               for s in group[1:])

DEFAULT_GRAPH_CHECKS: Dict[str, GraphCheck] = {
    'hook-formula': check_hook_formula,
    'longest-hook': check_longest_hook,
    'leading-term': check_leading_term,
    'leaf-count': check_leaf_count,
    'inference': check_inference,
}

DEFAULT_CLASS_CHECKS: Dict[str, ClassCheck] = {
    'equal-csf-same-cycle-size': check_same_cycle_size,
    'equal-csf-equal-k-same-r': check_same_k_same_r,
    'conjecture': check_conjecture,
}

# sweeps outside the unicyclic enumeration

def _family_sweep(n_max: int, outcome: CheckOutcome):
    engine = get_engine()
    for n in range(4, min(n_max, 10) + 1):
        for name, formula, builder in (('path', path_csf, families.path),
                                       ('cycle', cycle_csf, families.cycle),
                                       ('pan', pan_csf, families.pan)):
            ok = formula(n) == engine.star_expand(builder(n))
            outcome.record(ok, {'family': name, 'n': n})

def _bicyclic_sweep(n_max: int, outcome: CheckOutcome):
    engine = get_engine()
    for shape in ('typeI', 'typeII'):
        for s in (3, 4, 5):
            for t in (3, 4, 5):
                for ell in (1, 2, 3):
                    try:
                        g = families.bicyclic(shape, s, t, ell)
                    except FormulaDomainError:
                        continue
                    if g.vertex_count > min(n_max, 12):
                        continue
                    x = engine.star_expand(g)
                    ok = x.get((g.vertex_count,)) == bicyclic_cn(shape, s, t, ell)
                    outcome.record(ok, {'shape': shape, 's': s, 't': t, 'ell': ell})

def _passes(check, subject) -> bool:
    try:
        return bool(check(subject))
    except CsfError as err:
        logger.debug("check raised %s", err)
        return False

def verify_theorems(n_max: int,
                    graph_checks: Optional[Dict[str, GraphCheck]] = None,
                    class_checks: Optional[Dict[str, ClassCheck]] = None,
                    include_sweeps: bool = True,
                    jobs: Optional[int] = None,
                    store: Optional[FingerprintStore] = None,
                    progress: bool = False) -> TheoremReport:
    """
    Run every check over all connected unicyclic graphs with 3..n_max vertices.

    Args:
        n_max (int): Largest vertex count, at most CSF_VERIFY_MAX_N
        graph_checks (dict, optional): Name -> per-graph check, the defaults when None
        class_checks (dict, optional): Name -> per-class check, the defaults when None
        include_sweeps (bool): Also run the path/cycle/pan and bicyclic sweeps
        jobs (int, optional): Worker processes for the expansions
        store (FingerprintStore, optional): Expansion cache
        progress (bool): Progress bars on stderr

    Returns:
        TheoremReport: Pass/fail counts with a smallest counterexample per failing check

    Raises:
        EnumerationRangeError: If n_max is out of range
    """
    max_n = get_int_setting('CSF_VERIFY_MAX_N', 12)
    if not 3 <= n_max <= max_n:
        raise EnumerationRangeError("n_max must lie in 3..%d, got %d" % (max_n, n_max))
    graph_checks = DEFAULT_GRAPH_CHECKS if graph_checks is None else graph_checks
    class_checks = DEFAULT_CLASS_CHECKS if class_checks is None else class_checks
    outcomes = {name: CheckOutcome(name) for name in list(graph_checks) + list(class_checks)}

    for n in range(3, n_max + 1):
        entries = fingerprint_unicyclic(n, None, jobs=jobs, store=store, progress=progress)
        samples = {e.code: GraphSample(e.graph, e.graph6, e.expansion) for e in entries}
        for entry in entries:
            sample = samples[entry.code]
            for name, check in graph_checks.items():
                outcomes[name].record(_passes(check, sample), sample.witness())
        for group in group_equal(entries):
            members = [samples[e.code] for e in group]
            for name, check in class_checks.items():
                outcomes[name].record(_passes(check, members), [m.witness() for m in members])
        logger.info("verified n=%d (%d graphs)", n, len(entries))

    report = TheoremReport(n_max=n_max, outcomes=list(outcomes.values()))
    if include_sweeps:
        families_outcome = CheckOutcome('closed-form-families')
        _family_sweep(n_max, families_outcome)
        bicyclic_outcome = CheckOutcome('bicyclic-cn')
        _bicyclic_sweep(n_max, bicyclic_outcome)
        report.outcomes.extend([families_outcome, bicyclic_outcome])
    for outcome in report.outcomes:
        if outcome.failed:
            logger.warning("check %s failed %d time(s)", outcome.name, outcome.failed)
    return report
