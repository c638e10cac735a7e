#!/usr/bin/env python
# -*- coding: utf-8 -*-

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from handlers.exceptions import (
    EmptyExpansionError, NonPositivePartError, NotAHookError, PartitionError,
    SizeMismatchError, UsageError
)
from models.expansion import StarExpansion, csf_equal
from models.partition import (
    Partition, body_tail, hook, hook_m1, is_hook, lex_compare, partitions_of, sort_concat
)
from utils.combinatorics import (
    binomial, elementary_symmetric, multinomial, product_minus_one, sign
)

def test_partitions_of_four_in_lex_order():
    assert list(partitions_of(4)) == [(1, 1, 1, 1), (2, 1, 1), (2, 2), (3, 1), (4,)]

def test_partition_counts():
    assert [len(list(partitions_of(n))) for n in range(1, 11)] == [1, 2, 3, 5, 7, 11, 15, 22, 30, 42]

def test_lex_compare():
    assert lex_compare(Partition((3, 1)), Partition((2, 2))) == 1
    assert lex_compare(Partition((2, 1, 1)), Partition((2, 2))) == -1
    assert lex_compare(Partition((4,)), Partition((4,))) == 0
    with pytest.raises(SizeMismatchError):
        lex_compare(Partition((3,)), Partition((2, 1, 1)))

def test_sort_concat():
    assert sort_concat((1, 3), (2, 3)) == (3, 3, 2, 1)
    assert sort_concat((), (2,)) == (2,)
    with pytest.raises(NonPositivePartError):
        sort_concat((2, 0))

parts = st.lists(st.integers(1, 9), max_size=6)

@settings(max_examples=100)
@given(parts, parts)
def test_sort_concat_commutes(a, b):
    assert sort_concat(a, b) == sort_concat(b, a)

@settings(max_examples=100)
@given(parts, parts, parts)
def test_sort_concat_associates(a, b, c):
    assert sort_concat(sort_concat(a, b), c) == sort_concat(a, sort_concat(b, c))
    assert sum(sort_concat(sort_concat(a, b), c)) == sum(a) + sum(b) + sum(c)

def test_partition_validation():
    with pytest.raises(NonPositivePartError):
        Partition((2, -1))
    with pytest.raises(PartitionError):
        Partition((1, 2))
    assert Partition.from_text('1+3+3+1') == (3, 3, 1, 1)
    assert Partition.from_text('[3, 2]') == (3, 2)
    assert Partition.from_list([1, 2]) == (2, 1)
    with pytest.raises(UsageError):
        Partition.from_text('3+x')

def test_hooks_and_body_tail():
    assert is_hook(Partition((5, 1, 1)))
    assert is_hook(Partition((5,)))
    assert not is_hook(Partition((3, 2, 1)))
    assert hook_m1(Partition((4, 1, 1, 1))) == 3
    with pytest.raises(NotAHookError):
        hook_m1(Partition((2, 2)))
    assert hook(6, 2) == (4, 1, 1)
    bt = body_tail(Partition((3, 2, 1, 1)))
    assert bt.body == (3, 2) and bt.tail == 2
    assert Partition((3, 2, 2, 1)).multiplicities().above_one() == [2, 1]

@settings(max_examples=50)
@given(st.integers(1, 12))
def test_partitions_are_strictly_increasing(n):
    parts = list(partitions_of(n))
    assert all(sum(p) == n for p in parts)
    assert all(lex_compare(a, b) == -1 for a, b in zip(parts, parts[1:]))

def test_expansion_basics():
    x = StarExpansion(4, {(2, 2): 1, (4,): 2, (3, 1): -2, (2, 1, 1): 0})
    assert len(x) == 3
    assert x[(2, 1, 1)] == 0
    assert x.leading_term() == ((2, 2), 1)
    assert [list(k) for k, _ in x.items()] == [[2, 2], [3, 1], [4]]
    assert StarExpansion.from_dict(x.to_dict()) == x
    assert x.to_text() == '2st(4) - 2st(3,1) + st(2,2)'
    with pytest.raises(EmptyExpansionError):
        StarExpansion(3, {}).leading_term()
    with pytest.raises(SizeMismatchError):
        StarExpansion.from_dict({'n': 3, 'coeffs': [{'partition': [2, 2], 'c': 1}]})
    with pytest.raises(UsageError):
        StarExpansion.from_dict({'coeffs': []})

def test_expansion_product_concatenates_parts():
    product = StarExpansion.star(3).product(StarExpansion(2, {(2,): 1, (1, 1): -1}))
    assert product == StarExpansion(5, {(3, 2): 1, (3, 1, 1): -1})
    assert csf_equal(product.product(StarExpansion.one()), product)

def test_combinatorics_helpers():
    assert binomial(5, 2) == 10
    assert binomial(3, -1) == 0 and binomial(2, 3) == 0
    assert multinomial([2, 1]) == 3
    assert multinomial([]) == 1
    assert sign(3) == -1 and sign(0) == 1
    assert elementary_symmetric([2, 3, 4], 2) == 26
    assert elementary_symmetric([2, 3], 3) == 0
    assert product_minus_one([3, 3, 2]) == 4
