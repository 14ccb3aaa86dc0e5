"""Partition and hook-length machinery.

The independent checks here are the classics: Euler's pentagonal-number
recurrence for partition counts, conjugation as an involution, and the
branching rule d(lambda) = sum of d(mu) over corner-removals, which
pins the hook-length dimensions without using hooks at all.
"""

import math
from functools import lru_cache

import pytest
from hypothesis import given, settings, strategies as st

from codlab.alt_codegrees import sym_degree
from codlab.partitions import (
    conjugate,
    corners,
    enumerate_partitions,
    format_partition,
    hook_length,
    hook_lengths,
    hook_product,
    is_self_conjugate,
    parse_partition,
    partition_size,
    remove_corner,
)


def pentagonal_partition_counts(limit):
    """p(0..limit) via Euler's recurrence, independent of enumeration."""
    p = [1] + [0] * limit
    for n in range(1, limit + 1):
        k = 1
        while True:
            g1 = k * (3 * k - 1) // 2
            g2 = k * (3 * k + 1) // 2
            if g1 > n:
                break
            sign = -1 if k % 2 == 0 else 1
            p[n] += sign * p[n - g1]
            if g2 <= n:
                p[n] += sign * p[n - g2]
            k += 1
    return p


def test_enumeration_counts_match_pentagonal():
    counts = pentagonal_partition_counts(28)
    for n in range(1, 29):
        assert sum(1 for _ in enumerate_partitions(n)) == counts[n]


def test_enumeration_is_reverse_lex_and_complete():
    parts = list(enumerate_partitions(7))
    assert parts[0] == (7,)
    assert parts[-1] == (1,) * 7
    assert parts == sorted(parts, reverse=True)
    assert len(set(parts)) == len(parts)
    assert all(partition_size(lam) == 7 for lam in parts)


@given(st.integers(min_value=1, max_value=14), st.data())
def test_conjugate_involution(n, data):
    lam = data.draw(st.sampled_from(list(enumerate_partitions(n))))
    mu = conjugate(lam)
    assert partition_size(mu) == n
    assert conjugate(mu) == lam
    assert is_self_conjugate(lam) == (lam == mu)


def test_parse_format_roundtrip():
    assert parse_partition("[3,2]") == (3, 2)
    assert parse_partition("3,2") == (3, 2)
    assert format_partition((3, 2)) == "[3,2]"
    assert parse_partition("[]") == ()  # the empty partition of 0
    with pytest.raises(ValueError):
        parse_partition("[2,3]")
    with pytest.raises(ValueError):
        parse_partition("[3,0]")


def test_hook_lengths_explicit():
    # (3,2): first row hooks 4,3,1; second row 2,1; product 24, dim 5
    assert hook_lengths((3, 2)) == [[4, 3, 1], [2, 1]]
    assert hook_product((3, 2)) == 24
    assert sym_degree((3, 2)) == 5
    assert hook_length((3, 2), (1, 1)) == 4


def test_hook_lengths_staircase():
    # (3,2,1) is self-conjugate with hook products known by hand
    assert is_self_conjugate((3, 2, 1))
    assert hook_lengths((3, 2, 1)) == [[5, 3, 1], [3, 1], [1]]
    assert hook_product((3, 2, 1)) == 45


@given(st.integers(min_value=2, max_value=12), st.data())
def test_corner_removal(n, data):
    lam = data.draw(st.sampled_from(list(enumerate_partitions(n))))
    cs = corners(lam)
    assert cs, "every non-empty partition has a corner"
    for cell in cs:
        mu = remove_corner(lam, cell)
        assert partition_size(mu) == n - 1


@lru_cache(maxsize=None)
def branching_degree(lam):
    """Dimension via the branching rule only; no hook lengths."""
    if lam == (1,):
        return 1
    return sum(branching_degree(remove_corner(lam, c)) for c in corners(lam))


@pytest.mark.parametrize("n", range(2, 13))
def test_hook_formula_matches_branching_rule(n):
    for lam in enumerate_partitions(n):
        assert sym_degree(lam) == branching_degree(lam)


@pytest.mark.parametrize("n", range(1, 13))
def test_sum_of_squares_is_factorial(n):
    assert sum(sym_degree(lam) ** 2 for lam in enumerate_partitions(n)) == math.factorial(n)


@settings(max_examples=40)
@given(st.integers(min_value=1, max_value=12), st.data())
def test_hook_product_conjugation_invariant(n, data):
    lam = data.draw(st.sampled_from(list(enumerate_partitions(n))))
    assert hook_product(lam) == hook_product(conjugate(lam))
