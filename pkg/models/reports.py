#!/usr/bin/env python
# -*- coding: utf-8 -*-

from dataclasses import dataclass, field
from typing import Dict, FrozenSet, List, Optional, Tuple

from handlers.exceptions import FormulaDomainError

@dataclass(frozen=True)
class HookParams:
    """Structural parameters that determine every hook coefficient"""
    n: int
    c: int
    k: int
    r: int
    m1: int = 0

    @staticmethod
    def check_structure(c: int, k: int, r: int):
        """
        Raises:
            FormulaDomainError: If no unicyclic graph has cycle size c, k internal edges and r non-trivial trees
        """
        if c < 3:
            raise FormulaDomainError("cycle size must be at least 3, got %d" % c)
        if not 0 <= r <= c:
            raise FormulaDomainError("r must lie in 0..c, got r=%d c=%d" % (r, c))
        if k < c:
            raise FormulaDomainError("k=%d is smaller than the cycle size %d" % (k, c))

    def validate(self):
        """
        Raises:
            FormulaDomainError: If the parameters cannot come from a unicyclic graph
        """
        self.check_structure(self.c, self.k, self.r)
        # the internal edges span a unicyclic graph on the non-leaf vertices
        if self.n < self.k:
            raise FormulaDomainError("n=%d is smaller than k=%d" % (self.n, self.k))
        if self.m1 < 0:
            raise FormulaDomainError("m1 must be non-negative, got %d" % self.m1)
        return self

    def with_m1(self, m1: int) -> 'HookParams':
        return HookParams(self.n, self.c, self.k, self.r, m1)

    def to_dict(self):
        return {'n': self.n, 'c': self.c, 'k': self.k, 'r': self.r, 'm1': self.m1}

@dataclass(frozen=True)
class LambdaWord:
    """Word over L (delete), M (dot-contract), R (leaf-contract), X (skipped)"""
    symbols: str

    def __post_init__(self):
        if set(self.symbols) - set('LMRX'):
            raise FormulaDomainError("letters must be L, M, R or X: %r" % self.symbols)

    def __str__(self):
        return self.symbols

@dataclass
class StructuralReport:
    """What an expansion reveals about an unknown connected unicyclic graph"""
    n: int
    cycle_size: int
    is_pure_cycle: bool
    longest_hook_m: int
    kr_candidates: FrozenSet[Tuple[int, int]]
    leaf_count_candidates: FrozenSet[int]
    is_cuttlefish: bool
    hook_coefficients: List[int] = field(default_factory=list)
    leading_partition: List[int] = field(default_factory=list)
    leading_coefficient: int = 0

    @property
    def is_ambiguous(self) -> bool:
        return len(self.kr_candidates) > 1

    def to_dict(self):
        return {
            'n': self.n,
            'cycle_size': self.cycle_size,
            'is_pure_cycle': self.is_pure_cycle,
            'longest_hook_m': self.longest_hook_m,
            'kr_candidates': [list(kr) for kr in sorted(self.kr_candidates)],
            'leaf_count_candidates': sorted(self.leaf_count_candidates),
            'is_cuttlefish': self.is_cuttlefish,
            'hook_coefficients': list(self.hook_coefficients),
            'leading_partition': list(self.leading_partition),
            'leading_coefficient': self.leading_coefficient,
        }

    @classmethod
    def from_dict(cls, data):
        return cls(
            n=data['n'],
            cycle_size=data['cycle_size'],
            is_pure_cycle=data['is_pure_cycle'],
            longest_hook_m=data['longest_hook_m'],
            kr_candidates=frozenset(tuple(kr) for kr in data['kr_candidates']),
            leaf_count_candidates=frozenset(data['leaf_count_candidates']),
            is_cuttlefish=data['is_cuttlefish'],
            hook_coefficients=list(data.get('hook_coefficients', [])),
            leading_partition=list(data.get('leading_partition', [])),
            leading_coefficient=data.get('leading_coefficient', 0),
        )

@dataclass
class CollisionClass:
    """Non-isomorphic graphs sharing one expansion"""
    expansion_ref: str
    graphs: List[str]
    codes: List[str] = field(default_factory=list)

    def to_dict(self):
        return {'expansion_ref': self.expansion_ref, 'graphs': list(self.graphs)}

@dataclass
class CollisionReport:
    """CSF-equivalence classes of size at least two for fixed (n, c)"""
    n: int
    c: Optional[int]
    graph_count: int
    classes: List[CollisionClass] = field(default_factory=list)

    @property
    def pair_count(self) -> int:
        return sum(len(cls.graphs) * (len(cls.graphs) - 1) // 2 for cls in self.classes)

    def to_dict(self):
        return {
            'n': self.n,
            'c': self.c,
            'graph_count': self.graph_count,
            'pair_count': self.pair_count,
            'classes': [cls.to_dict() for cls in self.classes],
        }

@dataclass
class CheckOutcome:
    """Pass/fail tally for one named check"""
    name: str
    passed: int = 0
    failed: int = 0
    counterexample: Optional[Dict] = None

    def record(self, ok: bool, witness=None):
        if ok:
            self.passed += 1
            return
        self.failed += 1
        if self.counterexample is None:
            self.counterexample = witness

    def to_dict(self):
        return {
            'check': self.name,
            'passed': self.passed,
            'failed': self.failed,
            'counterexample': self.counterexample,
        }

@dataclass
class TheoremReport:
    """Result of running every check over an enumeration range"""
    n_max: int
    outcomes: List[CheckOutcome] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(o.failed == 0 for o in self.outcomes)

    def outcome(self, name: str) -> CheckOutcome:
        for o in self.outcomes:
            if o.name == name:
                return o
        raise KeyError(name)

    def to_dict(self):
        return {
            'n_max': self.n_max,
            'ok': self.ok,
            'checks': [o.to_dict() for o in self.outcomes],
        }
