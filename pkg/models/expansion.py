#!/usr/bin/env python
# -*- coding: utf-8 -*-

from dataclasses import dataclass, field
from typing import Dict, Iterator, List, Tuple

from handlers.exceptions import EmptyExpansionError, UsageError, SizeMismatchError
from models.partition import Partition

def merge_parts(a, b) -> Partition:
    """sort(a·b) for two partitions."""
    if not a:
        return Partition.trusted(tuple(b))
    if not b:
        return Partition.trusted(tuple(a))
    return Partition.trusted(tuple(sorted(a + b, reverse=True)))

@dataclass
class SparseExpansion:
    """
    Sparse map partition -> exact integer for one degree n.

    Zero coefficients are never stored.
    """
    n: int
    coeffs: Dict[Partition, int] = field(default_factory=dict)

    basis_symbol = 'b'

    def __post_init__(self):
        self.coeffs = {Partition.trusted(tuple(k)): int(v) for k, v in self.coeffs.items() if v}

    def __getitem__(self, partition) -> int:
        return self.coeffs.get(tuple(partition), 0)

    def get(self, partition, default=0) -> int:
        return self.coeffs.get(tuple(partition), default)

    def __len__(self):
        return len(self.coeffs)

    def __eq__(self, other):
        if not isinstance(other, SparseExpansion):
            return NotImplemented
        return type(self) is type(other) and self.n == other.n and self.coeffs == other.coeffs

    def support(self) -> List[Partition]:
        return sorted(self.coeffs)

    def items(self) -> Iterator[Tuple[Partition, int]]:
        for key in sorted(self.coeffs):
            yield key, self.coeffs[key]

    def leading_term(self) -> Tuple[Partition, int]:
        """
        The lexicographically smallest partition with nonzero coefficient.

        Raises:
            EmptyExpansionError: If every coefficient is zero
        """
        if not self.coeffs:
            raise EmptyExpansionError("expansion of degree %d has empty support" % self.n)
        key = min(self.coeffs)
        return key, self.coeffs[key]

    def product(self, other):
        """Product where basis indices multiply by sort-concatenation."""
        terms: Dict[Partition, int] = {}
        for a, ca in self.coeffs.items():
            for b, cb in other.coeffs.items():
                key = merge_parts(a, b)
                terms[key] = terms.get(key, 0) + ca * cb
        return type(self)(self.n + other.n, terms)

    @classmethod
    def from_dict(cls, data):
        """
        Create an expansion from its JSON document

        Args:
            data (dict): {"n": 4, "coeffs": [{"partition": [2, 2], "c": 1}, ...]}

        Returns:
            SparseExpansion: New instance

        Raises:
            UsageError: If the document is malformed
            SizeMismatchError: If a partition is not of n
        """
        try:
            n = int(data['n'])
            terms = {}
            for entry in data.get('coeffs', []):
                partition = Partition.from_list(entry['partition'])
                if partition.size != n:
                    raise SizeMismatchError("partition %s is not of %d" % (partition.to_list(), n))
                terms[partition] = terms.get(partition, 0) + int(entry['c'])
        except (KeyError, TypeError, ValueError) as err:
            raise UsageError("malformed expansion document: %s" % err) from None
        return cls(n, terms)

    def to_dict(self):
        return {
            'n': self.n,
            'coeffs': [{'partition': list(k), 'c': v} for k, v in self.items()],
        }

    def to_text(self) -> str:
        if not self.coeffs:
            return '0'
        pieces = []
        for key, value in sorted(self.coeffs.items(), reverse=True):
            magnitude = '' if abs(value) == 1 else str(abs(value))
            term = '%s%s(%s)' % (magnitude, self.basis_symbol, ','.join(str(p) for p in key))
            pieces.append(('- ' if value < 0 else '+ ') + term)
        text = ' '.join(pieces)
        return text[2:] if text.startswith('+ ') else '-' + text[2:]

class StarExpansion(SparseExpansion):
    """Expansion X_G = Σ c_λ st_λ in the star basis"""

    basis_symbol = 'st'

    @classmethod
    def star(cls, k: int) -> 'StarExpansion':
        return cls(k, {Partition.trusted((k,)): 1})

    @classmethod
    def one(cls) -> 'StarExpansion':
        """The empty product (degree 0)."""
        return cls(0, {Partition.trusted(()): 1})

class PowerSumExpansion(SparseExpansion):
    """Expansion in the power-sum basis p_λ"""

    basis_symbol = 'p'

@dataclass(frozen=True)
class DncNodeResult:
    """One leaf of the deletion-near-contraction tree"""
    partition: Partition
    sign: int

    def to_dict(self):
        return {'partition': list(self.partition), 'sign': self.sign}

def product(a: StarExpansion, b: StarExpansion) -> StarExpansion:
    return a.product(b)

def leading_term(x: SparseExpansion) -> Tuple[Partition, int]:
    return x.leading_term()

def csf_equal(a: SparseExpansion, b: SparseExpansion) -> bool:
    """Exact equality of supports and coefficients."""
    return a.n == b.n and a.coeffs == b.coeffs
