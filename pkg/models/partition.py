#!/usr/bin/env python
# -*- coding: utf-8 -*-

from collections import Counter
from dataclasses import dataclass
from typing import Dict, Iterable, Iterator, List

from handlers.exceptions import (
    NonPositivePartError, NotAHookError, PartitionError, SizeMismatchError, UsageError
)

class Partition(tuple):
    """
    Integer partition stored as its weakly decreasing parts.

    Subclassing tuple keeps hashing and comparison native: for two
    partitions of the same n, tuple order is the lexicographic order.
    """

    __slots__ = ()

    def __new__(cls, parts: Iterable[int] = ()):
        parts = tuple(int(p) for p in parts)
        if any(p <= 0 for p in parts):
            raise NonPositivePartError("partition parts must be positive: %s" % (parts,))
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise PartitionError("partition parts must be weakly decreasing: %s" % (parts,))
        return tuple.__new__(cls, parts)

    @classmethod
    def trusted(cls, parts) -> 'Partition':
        """Wrap parts already known to be positive and sorted."""
        return tuple.__new__(cls, parts)

    @classmethod
    def from_text(cls, text: str) -> 'Partition':
        """
        Parse "3+3+1+1", "3,3,1,1" or "[3,3,1,1]"

        Raises:
            UsageError: If the text is not a list of integers
        """
        cleaned = text.strip().strip('[]()')
        if not cleaned:
            return cls(())
        try:
            parts = [int(p) for p in cleaned.replace('+', ',').split(',') if p.strip()]
        except ValueError:
            raise UsageError("not a partition: %r" % text) from None
        return cls(sorted(parts, reverse=True))

    @classmethod
    def from_list(cls, values) -> 'Partition':
        return cls(sorted((int(v) for v in values), reverse=True))

    @property
    def parts(self):
        return tuple(self)

    @property
    def size(self) -> int:
        return sum(self)

    @property
    def length(self) -> int:
        return len(self)

    @property
    def m1(self) -> int:
        """Number of parts equal to 1."""
        count = 0
        for p in reversed(self):
            if p != 1:
                break
            count += 1
        return count

    def multiplicities(self) -> 'MultiplicityView':
        return MultiplicityView(dict(Counter(self)))

    def body_tail(self) -> 'BodyTail':
        tail = self.m1
        return BodyTail(Partition.trusted(self[:len(self) - tail]), tail)

    def is_hook(self) -> bool:
        return len(self) < 2 or self[1] == 1

    def hook_m1(self) -> int:
        if not self.is_hook():
            raise NotAHookError("%s is not a hook" % (self.to_list(),))
        return self.m1

    def to_list(self) -> List[int]:
        return list(self)

    def to_text(self) -> str:
        return '+'.join(str(p) for p in self)

    def __repr__(self):
        return 'Partition(%s)' % (tuple(self),)

@dataclass(frozen=True)
class MultiplicityView:
    """m[i] = number of parts equal to i"""
    m: Dict[int, int]

    def __getitem__(self, part: int) -> int:
        return self.m.get(part, 0)

    def size(self) -> int:
        return sum(i * k for i, k in self.m.items())

    def length(self) -> int:
        return sum(self.m.values())

    def above_one(self) -> List[int]:
        """m₂, m₃, … in increasing part order (zero entries omitted)."""
        return [k for part, k in sorted(self.m.items()) if part > 1]

@dataclass(frozen=True)
class BodyTail:
    """Split of a partition at its last part above 1"""
    body: Partition
    tail: int

def lex_compare(a: Partition, b: Partition) -> int:
    """
    Lexicographic comparison of two partitions of the same integer.

    Returns:
        int: -1, 0 or 1

    Raises:
        SizeMismatchError: If |a| != |b|
    """
    if sum(a) != sum(b):
        raise SizeMismatchError("cannot compare partitions of %d and %d" % (sum(a), sum(b)))
    a, b = tuple(a), tuple(b)
    return (a > b) - (a < b)

def sort_concat(a: Iterable[int], b: Iterable[int] = ()) -> Partition:
    """
    Multiset union of two sequences of positive integers as a partition.

    Raises:
        NonPositivePartError: If an entry is not positive
    """
    parts = list(a) + list(b)
    if any(p <= 0 for p in parts):
        raise NonPositivePartError("entries must be positive: %s" % (parts,))
    parts.sort(reverse=True)
    return Partition.trusted(tuple(parts))

def is_hook(p: Partition) -> bool:
    return Partition.trusted(p).is_hook()

def hook_m1(p: Partition) -> int:
    return Partition.trusted(p).hook_m1()

def body_tail(p: Partition) -> BodyTail:
    return Partition.trusted(p).body_tail()

def hook(n: int, m1: int) -> Partition:
    """The hook (n − m1, 1^m1)."""
    if m1 < 0 or m1 > n - 1:
        raise PartitionError("no hook of %d with %d ones" % (n, m1))
    return Partition.trusted((n - m1,) + (1,) * m1)

def partitions_of(n: int) -> Iterator[Partition]:
    """All partitions of n in increasing lexicographic order, (1ⁿ) first."""
    if n == 0:
        yield Partition.trusted(())
        return
    for parts in reversed(list(_descending(n, n))):
        yield Partition.trusted(parts)

def _descending(n, largest):
    # decreasing lex order
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in _descending(n - first, first):
            yield (first,) + rest
