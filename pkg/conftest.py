#!/usr/bin/env python
# -*- coding: utf-8 -*-

import pytest

from services import families
from services.star_engine import StarEngine

def pytest_configure(config):
    config.addinivalue_line("markers", "slow: exhaustive sweeps over whole enumerations")

@pytest.fixture(autouse=True)
def isolated_settings(tmp_path, monkeypatch):
    """Keep caches and logs of every test inside its own temporary directory"""
    monkeypatch.setenv('CSF_CACHE_DIR', str(tmp_path / 'cache'))
    monkeypatch.setenv('LOG_DIR', str(tmp_path / 'logs'))
    monkeypatch.setenv('CSF_JOBS', '1')
    return tmp_path

@pytest.fixture
def engine():
    return StarEngine()

@pytest.fixture
def paw():
    return families.paw()

@pytest.fixture
def triangle_with_tree():
    return families.triangle_with_tree()

@pytest.fixture
def same_hook_pair():
    return families.same_hooks_r4(), families.same_hooks_r1()

@pytest.fixture
def four_cycle_fourteen():
    return families.four_cycle_fourteen()

@pytest.fixture
def four_cycle_nineteen():
    return families.four_cycle_nineteen()
