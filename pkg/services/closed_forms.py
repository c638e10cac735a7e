#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
Closed-form star-basis coefficients.

Hook coefficients of trees and unicyclic graphs, full expansions of
paths, cycles and pans, leading partitions and leading coefficients of
unicyclic graphs, and the bicyclic top coefficient.
"""

from fractions import Fraction
from typing import List, Sequence, Tuple

from handlers.exceptions import FormulaDomainError
from models.expansion import StarExpansion
from models.graph import Graph
from models.partition import Partition, hook, partitions_of, sort_concat
from models.reports import HookParams
from models.unicyclic import DeepVertexProfile, UnicyclicDecomposition
from services.decomposition import deep_vertex_profile, tprime_profile, unicyclic_decompose
from utils.combinatorics import (
    binomial, elementary_symmetric, multinomial, product_minus_one, sign
)

R_CASE_ONE = 'r1'
R_CASE_MANY = 'rge2'

# hooks

def tree_hook_coeff(k: int, m1: int) -> int:
    """(−1)^m1 C(k, m1) for a tree with k internal edges."""
    if k < 0 or m1 < 0:
        raise FormulaDomainError("k and m1 must be non-negative")
    return sign(m1) * binomial(k, m1)

def unicyclic_hook_coeff(p: HookParams) -> int:
    """
    Coefficient of (n − m1, 1^m1) for a connected unicyclic graph:
    (−1)^m1 [(r − 1) C(k − 2, m1 − 1) + (c − 1) C(k − 2, m1)].
    """
    p.validate()
    return sign(p.m1) * ((p.r - 1) * binomial(p.k - 2, p.m1 - 1)
                         + (p.c - 1) * binomial(p.k - 2, p.m1))

def unicyclic_hook_vector(n: int, c: int, k: int, r: int) -> List[int]:
    """Hook coefficients for m1 = 0..n−2."""
    base = HookParams(n, c, k, r)
    return [unicyclic_hook_coeff(base.with_m1(m1)) for m1 in range(n - 1)]

def hook_vector(x: StarExpansion) -> List[int]:
    """Hook coefficients of an expansion for m1 = 0..n−2."""
    return [x.get(hook(x.n, m1)) for m1 in range(max(x.n - 1, 0))]

def longest_hook(c: int, k: int, r: int) -> Tuple[int, int]:
    """
    Largest m1 with a nonzero hook coefficient, with that coefficient.

    Returns:
        Tuple[int, int]: (m1, coefficient)
    """
    HookParams.check_structure(c, k, r)
    if r == 0:
        return k - 2, sign(k - 2)
    if r == 1:
        return k - 2, sign(k - 2) * (c - 1)
    return k - 1, sign(k - 1) * (r - 1)

# families

def _body_count(lam: Partition) -> int:
    return len(lam) - lam.m1

def path_csf(n: int) -> StarExpansion:
    """
    Star expansion of P_n, n ≥ 4:
    c_λ = (−1)^m1 · multinomial(m2..mn) · C(n − 2 − ℓ(λ) + m1, m1).

    Raises:
        FormulaDomainError: For n < 4
    """
    if n < 4:
        raise FormulaDomainError("path formula needs n >= 4, got %d" % n)
    terms = {}
    for lam in partitions_of(n):
        m1 = lam.m1
        value = (sign(m1) * multinomial(lam.multiplicities().above_one())
                 * binomial(n - 2 - len(lam) + m1, m1))
        if value:
            terms[lam] = value
    return StarExpansion(n, terms)

def _non_hook_term(numerator: int, lam: Partition, n: int) -> int:
    body = _body_count(lam)
    if body == 0:
        return 0
    m1 = lam.m1
    value = (Fraction(numerator, body) * multinomial(lam.multiplicities().above_one())
             * binomial(n - len(lam) + m1 - 1, m1))
    if value.denominator != 1:
        raise FormulaDomainError("non-integral coefficient %s for %s" % (value, lam.to_list()))
    return sign(m1) * int(value)

def cycle_coeff(n: int, lam: Partition) -> int:
    """Coefficient of st_λ in the expansion of C_n."""
    m1 = lam.m1
    if lam.is_hook() and m1 != n - 1:
        return sign(m1) * (-binomial(n - 2, m1 - 1) + (n - 1) * binomial(n - 2, m1))
    return _non_hook_term(n, lam, n)

def cycle_csf(n: int) -> StarExpansion:
    if n < 3:
        raise FormulaDomainError("cycle formula needs n >= 3, got %d" % n)
    terms = {lam: cycle_coeff(n, lam) for lam in partitions_of(n)}
    return StarExpansion(n, terms)

def pan_coeff(n: int, lam: Partition) -> int:
    """Coefficient of st_λ in the expansion of the n-vertex pan."""
    m1 = lam.m1
    if lam.is_hook() and m1 != n - 1:
        return sign(m1) * (n - 2) * binomial(n - 3, m1)
    return _non_hook_term(n - len(lam), lam, n)

def pan_csf(n: int) -> StarExpansion:
    if n < 4:
        raise FormulaDomainError("pan formula needs n >= 4, got %d" % n)
    terms = {lam: pan_coeff(n, lam) for lam in partitions_of(n)}
    return StarExpansion(n, terms)

def cycle_no_ones_coeff(n: int, lam: Partition) -> int:
    """n (ℓ − 1)! / ∏ mᵢ! for λ ⊢ n with no 1-parts and at least two parts."""
    if lam.m1 or len(lam) < 2 or lam.size != n:
        raise FormulaDomainError("need a partition of %d with no ones and two or more parts" % n)
    counts = lam.multiplicities().above_one()
    return n * multinomial(counts) // len(lam)

def cycle_33_coeff(n: int) -> int:
    """
    Magnitude of the coefficient of (3, 3, 1^{n−6}) in X_{C_n}; 0 when n < 6.

    The coefficient itself carries the sign (−1)^{n−6}.
    """
    value = Fraction(n, 2) * binomial(n - 3, 3)
    return int(value)

def lead_coeff_cycle(n: int) -> int:
    """Coefficient of (2, 1^{n−2}) in X_{C_n}."""
    return sign(n - 2)

# leading terms

def leading_partition_unicyclic(d: UnicyclicDecomposition) -> Partition:
    """
    Leading partition predicted from the rooted-tree data.

    r = 0 gives (2, 1^{n−2}); r = 1 gives sort(λᵢ, 2, 1^{c−3}, μ) for the
    non-trivial tree i; r ≥ 2 gives sort(λ·μ).

    Raises:
        FormulaDomainError: If the decomposition is inconsistent
    """
    if d.c < 3 or len(d.lam) != d.c or not 0 <= d.r <= d.c:
        raise FormulaDomainError("invalid decomposition")
    if d.r == 0:
        return Partition.trusted((2,) + (1,) * (d.n - 2))
    if d.r == 1:
        i = d.nontrivial_indices()[0]
        return sort_concat((d.lam[i], 2) + (1,) * (d.c - 3), d.mu)
    return d.leaf_component_partition()

def num_leaves_from_leading(lead: Partition, r_case: str) -> int:
    """
    Leaf count from the leading partition.

    Raises:
        FormulaDomainError: For an empty partition or an unknown case
    """
    if not lead:
        raise FormulaDomainError("leading partition is empty")
    if r_case == R_CASE_ONE:
        return sum(lead) - len(lead) - 1
    if r_case == R_CASE_MANY:
        return sum(lead) - len(lead)
    raise FormulaDomainError("leaf count needs r case %r or %r, got %r"
                             % (R_CASE_ONE, R_CASE_MANY, r_case))

def _check_degrees(degrees: Sequence[int], least: int):
    if any(d < least for d in degrees):
        raise FormulaDomainError("degrees must be at least %d: %s" % (least, list(degrees)))

def lead_coeff_tree(deep_degrees: Sequence[int]) -> int:
    """(−1)^p ∏ (dᵢ − 1) over the p deep vertices of a tree."""
    _check_degrees(deep_degrees, 2)
    return sign(len(deep_degrees)) * product_minus_one(deep_degrees)

def lead_coeff_unicyclic_r1(c: int, deep_degrees_of_tprime: Sequence[int],
                            root_is_sprout: bool) -> int:
    """
    Leading coefficient when exactly one rooted tree is non-trivial.

    Args:
        c (int): Cycle size
        deep_degrees_of_tprime: Degrees (in T′) of the deep vertices of T′,
            root first when the root is a sprout
        root_is_sprout (bool): Whether the root of the non-trivial tree is a sprout
    """
    if c < 3:
        raise FormulaDomainError("cycle size must be at least 3")
    _check_degrees(deep_degrees_of_tprime, 2)
    p = len(deep_degrees_of_tprime)
    full = product_minus_one(deep_degrees_of_tprime)
    if root_is_sprout:
        if not deep_degrees_of_tprime:
            raise FormulaDomainError("a sprout root must be listed among the deep degrees")
        return sign(p) * ((c - 2) * full + product_minus_one(deep_degrees_of_tprime[1:]))
    return sign(p) * (c - 2) * full

def lead_coeff_unicyclic_rge2(profile: DeepVertexProfile, r: int) -> int:
    """
    Leading coefficient with at least two non-trivial rooted trees.

    Raises:
        FormulaDomainError: If r < 2 or r < s
    """
    s, p = profile.s, profile.p
    if r < 2:
        raise FormulaDomainError("need r >= 2, got %d" % r)
    if r < s:
        raise FormulaDomainError("r=%d is smaller than the sprout count %d" % (r, s))
    _check_degrees(profile.sprout_degrees, 3)
    _check_degrees(profile.nonsprout_deep_degrees, 2)
    deep = product_minus_one(profile.nonsprout_deep_degrees)
    if s == 0:
        return sign(p) * deep
    sprouts = product_minus_one(profile.sprout_degrees)
    if r == s:
        bracket = sprouts - sum(profile.sprout_degrees) + 2 * s - 1
    elif r == s + 1:
        bracket = sprouts - 1
    else:
        bracket = sprouts
    return sign(p + s) * deep * bracket

def alternating_elementary_sum(degrees: Sequence[int]) -> int:
    """Σⱼ (−1)ʲ e_{p−j}(d₁..d_p), equal to ∏ (dᵢ − 1)."""
    p = len(degrees)
    return sum(sign(j) * elementary_symmetric(degrees, p - j) for j in range(p + 1))

def cuttlefish_leading(c: int, t: int) -> Partition:
    if c < 3 or t < 1:
        raise FormulaDomainError("cuttlefish needs c >= 3 and t >= 1")
    return Partition.trusted((t + 1, 2) + (1,) * (c - 3))

def predict_leading_term(g: Graph) -> Tuple[Partition, int]:
    """Leading partition and coefficient of a connected unicyclic graph from its structure."""
    d = unicyclic_decompose(g)
    lead = leading_partition_unicyclic(d)
    if d.r == 0:
        return lead, lead_coeff_cycle(d.n)
    if d.r == 1:
        c, degrees, root_is_sprout = tprime_profile(g, d)
        return lead, lead_coeff_unicyclic_r1(c, degrees, root_is_sprout)
    return lead, lead_coeff_unicyclic_rge2(deep_vertex_profile(g, d), d.r)

# bicyclic

def bicyclic_cn(shape: str, s: int, t: int, ell: int) -> int:
    """
    Coefficient of st_(n) for a bicyclic graph.

    Type I (cycles joined by a path): (s − 1)(t − 1).
    Type II (cycles sharing a path of ell edges): (s − 1)(t − 1) − 2 C(ell, 2).
    """
    if s < 3 or t < 3:
        raise FormulaDomainError("cycle sizes must be at least 3")
    if shape.lower() in ('typei', 'type1', 'i'):
        return (s - 1) * (t - 1)
    if shape.lower() in ('typeii', 'type2', 'ii'):
        if ell < 1:
            raise FormulaDomainError("the shared path needs at least one edge")
        return (s - 1) * (t - 1) - 2 * binomial(ell, 2)
    raise FormulaDomainError("unknown bicyclic shape %r" % shape)
