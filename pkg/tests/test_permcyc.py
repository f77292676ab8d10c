"""Cycle-type algebra against a direct permutation oracle."""

import math
import random

import pytest
from hypothesis import given, settings, strategies as st

from ordkit import permcyc
from ordkit.permcyc import (
    CycleType,
    cycle_type_of,
    gamma,
    multiset_count,
    omega_of_power,
    ord_of,
    power,
)


def compose(a, b):
    """(a after b) in one-line notation."""
    return tuple(a[b[i]] for i in range(len(a)))


def perm_power(p, e):
    out = tuple(range(len(p)))
    for _ in range(e):
        out = compose(p, out)
    return out


def random_perm(rng, n):
    xs = list(range(n))
    rng.shuffle(xs)
    return tuple(xs)


def test_cycle_type_of_explicit():
    ct = cycle_type_of((1, 2, 0, 4, 3, 5))
    assert ct.lengths() == (3, 2, 1)
    assert gamma(ct) == 3
    assert ord_of(ct) == 6


def test_identity_and_single_cycle():
    ident = cycle_type_of(tuple(range(7)))
    assert ord_of(ident) == 1 and gamma(ident) == 7
    cyc = cycle_type_of(tuple((i + 1) % 9 for i in range(9)))
    assert ord_of(cyc) == 9 and gamma(cyc) == 1


@settings(max_examples=1000, deadline=None)
@given(st.integers(min_value=1, max_value=12),
       st.integers(min_value=1, max_value=12),
       st.randoms(use_true_random=False))
def test_power_matches_permutation_oracle(n, e, rng):
    sigma = random_perm(rng, n)
    assert cycle_type_of(perm_power(sigma, e)) == power(cycle_type_of(sigma), e)


@settings(max_examples=400, deadline=None)
@given(st.integers(min_value=1, max_value=10),
       st.integers(min_value=1, max_value=40),
       st.randoms(use_true_random=False))
def test_order_via_powers(n, e, rng):
    sigma = random_perm(rng, n)
    ct = cycle_type_of(sigma)
    o = ord_of(ct)
    assert perm_power(sigma, o) == tuple(range(n))
    assert ord_of(power(ct, e)) == o // math.gcd(o, e)


def test_power_rejects_nonpositive_exponent():
    ct = cycle_type_of((1, 0))
    with pytest.raises(ValueError):
        power(ct, 0)


def test_multiset_count():
    assert multiset_count(0, 3) == 1
    assert multiset_count(2, 3) == 6
    assert multiset_count(5, 1) == 1
    # oracle: explicit enumeration
    from itertools import combinations_with_replacement
    for n in range(0, 6):
        for k in range(1, 5):
            want = sum(1 for _ in combinations_with_replacement(range(k), n))
            assert multiset_count(n, k) == want


def test_omega_of_power_matches_multiset_form():
    for omega_s in range(1, 8):
        for n in range(1, 8):
            assert omega_of_power(omega_s, n) == multiset_count(n, omega_s)
    with pytest.raises(ValueError):
        omega_of_power(0, 1)
