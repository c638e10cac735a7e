#!/usr/bin/env python
# -*- coding: utf-8 -*-

from dataclasses import dataclass, field
from typing import FrozenSet, List, Optional, Tuple

from models.partition import Partition, sort_concat

@dataclass(frozen=True)
class VertexClassification:
    """Leaves, internal, deep vertices and (for unicyclic graphs) sprouts"""
    leaves: FrozenSet[int]
    internal: FrozenSet[int]
    deep: FrozenSet[int]
    sprouts: Optional[FrozenSet[int]] = None

    def to_dict(self):
        return {
            'leaves': sorted(self.leaves),
            'internal': sorted(self.internal),
            'deep': sorted(self.deep),
            'sprouts': None if self.sprouts is None else sorted(self.sprouts),
        }

@dataclass(frozen=True)
class RootedTree:
    """Tree T_i hanging from cycle vertex root"""
    root: int
    vertices: FrozenSet[int]

    @property
    def size(self) -> int:
        return len(self.vertices)

    @property
    def is_trivial(self) -> bool:
        return len(self.vertices) == 1

@dataclass(frozen=True)
class UnicyclicDecomposition:
    """
    A connected unicyclic graph seen as c rooted trees on a cycle.

    lam[i] is 1 plus the number of leaves adjacent to cycle[i]; mu_parts[i]
    lists the sizes of the other leaf components inside tree i.
    """
    n: int
    cycle: Tuple[int, ...]
    trees: Tuple[RootedTree, ...]
    lam: Tuple[int, ...]
    mu_parts: Tuple[Tuple[int, ...], ...]
    r: int
    k: int

    @property
    def c(self) -> int:
        return len(self.cycle)

    @property
    def mu(self) -> Tuple[int, ...]:
        """μ = μ⁽¹⁾·…·μ⁽ᶜ⁾ in cycle order."""
        return tuple(p for parts in self.mu_parts for p in parts)

    @property
    def mu_partition(self) -> Partition:
        return sort_concat(self.mu)

    def leaf_component_partition(self) -> Partition:
        return sort_concat(self.lam, self.mu)

    def nontrivial_indices(self) -> List[int]:
        return [i for i, tree in enumerate(self.trees) if not tree.is_trivial]

    def to_dict(self):
        return {
            'n': self.n,
            'c': self.c,
            'k': self.k,
            'r': self.r,
            'cycle': list(self.cycle),
            'trees': [sorted(t.vertices) for t in self.trees],
            'lambda': list(self.lam),
            'mu': list(self.mu),
        }

@dataclass(frozen=True)
class DeepVertexProfile:
    """Degrees of sprouts (b) and of non-sprout deep vertices (d)"""
    sprout_degrees: Tuple[int, ...] = field(default_factory=tuple)
    nonsprout_deep_degrees: Tuple[int, ...] = field(default_factory=tuple)

    @property
    def s(self) -> int:
        return len(self.sprout_degrees)

    @property
    def p(self) -> int:
        return len(self.nonsprout_deep_degrees)

    @classmethod
    def from_dict(cls, data):
        return cls(
            sprout_degrees=tuple(int(b) for b in data.get('sprout_degrees', [])),
            nonsprout_deep_degrees=tuple(int(d) for d in data.get('nonsprout_deep_degrees', [])),
        )

    def to_dict(self):
        return {
            'sprout_degrees': list(self.sprout_degrees),
            'nonsprout_deep_degrees': list(self.nonsprout_deep_degrees),
            's': self.s,
            'p': self.p,
        }
