#!/usr/bin/env python
# -*- coding: utf-8 -*-

import json

import pytest

from handlers.message_handler import canonical_json
from services import families
from services.canonical import canonical_form, code_hex
from services.collision_service import collision_search, fingerprint_unicyclic, group_equal
from services.fingerprint_store import FingerprintStore
from services.graph_ops import degree_sequence
from services.graph_io import format_graph6, parse_graph6
from workers.expansion_worker import ExpansionWorker, expand_graph6

def test_pairs_on_six_vertices():
    report = collision_search(6, 3, jobs=1)
    assert report.pair_count >= 1
    for cls in report.classes:
        graphs = [parse_graph6(text) for text in cls.graphs]
        assert len({canonical_form(g) for g in graphs}) == len(graphs)

@pytest.mark.parametrize('n', [5, 7])
def test_no_pairs_for_odd_triangle_graphs(n):
    assert collision_search(n, 3, jobs=1).pair_count == 0

def test_report_does_not_depend_on_jobs():
    single = collision_search(6, None, jobs=1)
    pooled = collision_search(6, None, jobs=2)
    assert single.to_dict() == pooled.to_dict()
    assert single.graph_count == 13

def test_report_document():
    data = collision_search(6, 3, jobs=1).to_dict()
    assert set(data) == {'n', 'c', 'graph_count', 'pair_count', 'classes'}
    assert set(data['classes'][0]) == {'expansion_ref', 'graphs'}

def test_fingerprint_store_round_trip(tmp_path):
    store = FingerprintStore(tmp_path / 'fp')
    assert store is FingerprintStore(tmp_path / 'fp')
    assert store.test_connection()
    first = fingerprint_unicyclic(6, 3, jobs=1, store=store)
    assert store.count() == len(first)
    cached = store.lookup([entry.code for entry in first])
    assert {code: value[0] for code, value in cached.items()} == {e.code: e.fingerprint for e in first}
    second = fingerprint_unicyclic(6, 3, jobs=1, store=store)
    assert [e.expansion_json for e in second] == [e.expansion_json for e in first]
    assert store.lookup([]) == {}

def test_group_equal_finds_equal_expansions():
    entries = fingerprint_unicyclic(6, 3, jobs=1)
    for group in group_equal(entries):
        assert len(group) >= 2
        assert all(e.expansion == group[0].expansion for e in group)

def test_expansion_worker(paw):
    text = format_graph6(paw)
    expected = canonical_json({'n': 4, 'coeffs': [
        {'partition': [2, 2], 'c': 1}, {'partition': [3, 1], 'c': -2}, {'partition': [4], 'c': 2},
    ]})
    assert expand_graph6(text) == expected
    assert ExpansionWorker(jobs=1).run([text, text]) == [expected, expected]
    assert ExpansionWorker(jobs=2).run([]) == []
    assert json.loads(expected)['n'] == 4

@pytest.mark.slow
def test_single_pair_on_twelve_vertices():
    report = collision_search(12, 4)
    assert report.pair_count == 1
    expected = sorted(code_hex(canonical_form(g))
                      for g in (families.collision_12_first(), families.collision_12_second()))
    assert sorted(report.classes[0].codes) == expected

@pytest.mark.slow
def test_collision_data_up_to_twelve():
    for n in (8, 10):
        assert collision_search(n, 3).pair_count >= 1
    for n in (9, 11):
        assert collision_search(n, 3).pair_count == 0
    for n in range(4, 12):
        assert collision_search(n, 4).pair_count == 0
    for c in (5, 6):
        for n in range(c, 13):
            assert collision_search(n, c).pair_count == 0

@pytest.mark.slow
def test_equal_expansions_share_degree_sequences():
    for c, n in ((4, 12), (4, 13)):
        for cls in collision_search(n, c).classes:
            sequences = {degree_sequence(parse_graph6(text)) for text in cls.graphs}
            assert len(sequences) == 1
