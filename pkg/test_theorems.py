#!/usr/bin/env python
# -*- coding: utf-8 -*-

import pytest

from handlers.exceptions import EnumerationRangeError
from services.closed_forms import hook_vector, unicyclic_hook_vector
from services.fingerprint_store import FingerprintStore
from services.theorem_checks import (
    DEFAULT_CLASS_CHECKS, DEFAULT_GRAPH_CHECKS, GraphSample, verify_theorems
)

def _off_by_one_hooks(sample: GraphSample) -> bool:
    d = sample.decomposition
    return hook_vector(sample.expansion) == unicyclic_hook_vector(d.n, d.c, d.k + 1, d.r)

def test_checks_pass_up_to_six():
    report = verify_theorems(6, jobs=1)
    assert report.ok
    names = [o.name for o in report.outcomes]
    assert names == list(DEFAULT_GRAPH_CHECKS) + list(DEFAULT_CLASS_CHECKS) + [
        'closed-form-families', 'bicyclic-cn']
    assert report.outcome('hook-formula').passed == 1 + 2 + 5 + 13
    assert report.outcome('equal-csf-same-cycle-size').passed >= 1

def test_broken_formula_reports_smallest_counterexample():
    report = verify_theorems(5, graph_checks={'off-by-one': _off_by_one_hooks},
                             class_checks={}, include_sweeps=False, jobs=1)
    assert not report.ok
    outcome = report.outcome('off-by-one')
    assert outcome.failed >= 1
    assert outcome.counterexample['n'] == 3
    assert report.to_dict()['checks'][0]['counterexample']['edges'] == [[0, 1], [0, 2], [1, 2]]

def test_cached_run_matches(tmp_path):
    store = FingerprintStore(tmp_path / 'cache')
    first = verify_theorems(5, include_sweeps=False, jobs=1, store=store)
    second = verify_theorems(5, include_sweeps=False, jobs=1, store=store)
    assert first.to_dict() == second.to_dict()
    assert store.count() == 1 + 2 + 5

def test_verify_range():
    with pytest.raises(EnumerationRangeError):
        verify_theorems(2)
    with pytest.raises(EnumerationRangeError):
        verify_theorems(13)
    with pytest.raises(KeyError):
        verify_theorems(3, jobs=1, include_sweeps=False).outcome('missing')

@pytest.mark.slow
def test_checks_pass_up_to_ten():
    assert verify_theorems(10).ok
