#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
Exact integer helpers shared by the closed-form coefficients.

Out-of-range binomials and multinomials evaluate to 0 so that every
formula is total over its parameter space.
"""

from functools import reduce
from itertools import combinations
from math import comb, factorial, prod
from typing import Iterable, Sequence

def binomial(a: int, b: int) -> int:
    """C(a, b), zero when b < 0, a < 0 or b > a."""
    if b < 0 or a < 0 or b > a:
        return 0
    return comb(a, b)

def multinomial(counts: Iterable[int]) -> int:
    """
    (Σ kᵢ)! / ∏ kᵢ!

    Args:
        counts: Non-negative block sizes; an empty sequence gives 1

    Returns:
        int: The multinomial coefficient, 0 if any count is negative
    """
    counts = list(counts)
    if any(k < 0 for k in counts):
        return 0
    total = factorial(sum(counts))
    return total // prod(factorial(k) for k in counts)

def sign(exponent: int) -> int:
    """(−1)^exponent."""
    return -1 if exponent % 2 else 1

def elementary_symmetric(values: Sequence[int], k: int) -> int:
    """e_k(values) by direct expansion over k-subsets."""
    if k < 0 or k > len(values):
        return 0
    return sum(prod(subset) for subset in combinations(values, k))

def product_minus_one(values: Iterable[int]) -> int:
    """∏ (vᵢ − 1); the empty product is 1."""
    return reduce(lambda acc, v: acc * (v - 1), values, 1)
