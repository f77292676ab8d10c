"""Partition counting: p(n), reduced partitions, the pi and pi-prime counts."""

import math
import random
from itertools import combinations_with_replacement

import pytest

from ordkit import partitions
from ordkit.partitions import (
    g2,
    is_reduced,
    iter_all,
    iter_admissible_pairs,
    iter_distinct,
    iter_pi_prime,
    iter_reduced,
    partition_count,
    pi_count,
    pi_prime_count,
    reduced_closure,
)


def test_partition_count_small():
    assert [partition_count(n) for n in range(11)] == [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]
    assert partition_count(100) == 190569292


def test_iter_all_matches_count():
    for n in range(1, 13):
        seen = list(iter_all(n))
        assert len(seen) == partition_count(n)
        assert len(set(seen)) == len(seen)
        assert all(sum(lam) == n and list(lam) == sorted(lam, reverse=True)
                   for lam in seen)


def test_distinct_partitions():
    assert [partitions.distinct_partition_count(n) for n in range(1, 11)] == [
        1, 1, 2, 2, 3, 4, 5, 6, 8, 10]
    for n in range(1, 12):
        assert len(list(iter_distinct(n))) == partitions.distinct_partition_count(n)


def test_reduced_partitions():
    for n in range(1, 16):
        red = list(iter_reduced(n))
        assert all(is_reduced(lam) for lam in red)
        assert len(set(red)) == len(red)
    # every partition maps to a reduced one of equal weight and lcm
    rng = random.Random(5)
    for _ in range(300):
        n = rng.randrange(1, 26)
        lam = rng.choice(list(iter_all(n)))
        mu = reduced_closure(lam)
        assert is_reduced(mu)
        assert sum(mu) == sum(lam)
        assert math.lcm(*mu) == math.lcm(*lam)


def test_g2_matches_weighted_pair_enumeration():
    # g2(d) counts pairs of distinct-part partitions of total weight w <= d,
    # each weighted by the d - w + 1 ways of padding the split point
    for d in range(1, 12):
        total = 0
        for wp in range(d + 1):
            for wm in range(d + 1 - wp):
                total += (d - wp - wm + 1) * (
                    partitions.distinct_partition_count(wp)
                    * partitions.distinct_partition_count(wm))
        assert g2(d) == total


def test_admissible_pairs_bc():
    for d in range(1, 9):
        pairs = list(iter_admissible_pairs(d, "BC"))
        assert len(set(pairs)) == len(pairs)
        for plus, minus in pairs:
            assert sum(plus) + sum(minus) == d


# --- recorded pi cells ------------------------------------------------------

def brute_pi(n, p, e):
    """Partitions of n with all parts <= p^e and some part > p^(e-1)."""
    total = 0
    for lam in iter_all(n):
        if max(lam) <= p**e and max(lam) > p ** (e - 1):
            total += 1
    return total


def test_pi_count_recorded_cells():
    assert pi_count(8, 3, 1) == 9
    assert pi_count(9, 2, 1) == 4
    assert pi_count(9, 2, 2) == 13
    assert pi_count(9, 2, 3) == 11
    assert sum(pi_count(9 - 2 * m, 2, 1) for m in (1, 2, 3)) == 6


def test_pi_count_against_brute_force():
    rng = random.Random(23)
    for _ in range(80):
        n = rng.randrange(1, 15)
        p = rng.choice([2, 3, 5])
        e = rng.randrange(1, 4)
        assert pi_count(n, p, e) == brute_pi(n, p, e)


def test_pi_prime_recorded_cells():
    assert pi_prime_count(10, 3, 1) == 7
    assert pi_prime_count(10, 3, 2) == 8
    assert pi_prime_count(12, 3, 1) == 10
    # cells whose recorded table values differ; the computed counts below
    # are brute-force verified by test_pi_prime_against_brute_force
    assert pi_prime_count(8, 5, 1) == 8
    assert pi_prime_count(8, 7, 1) == 9
    assert pi_prime_count(12, 3, 2) == 16


def brute_pi_prime(n, p, e):
    """Parts <= p^e, some part > p^(e-1), every even part with even
    multiplicity."""
    out = set()
    for lam in iter_all(n):
        if max(lam) > p**e or max(lam) <= p ** (e - 1):
            continue
        if any(x % 2 == 0 and lam.count(x) % 2 for x in set(lam)):
            continue
        out.add(tuple(sorted(lam, reverse=True)))
    return out


def test_pi_prime_against_brute_force():
    for n, p, e in [(10, 3, 1), (10, 3, 2), (12, 3, 1), (8, 5, 1),
                    (8, 7, 1), (12, 3, 2), (6, 2, 1), (9, 3, 1)]:
        got = {tuple(sorted(lam, reverse=True)) for lam in iter_pi_prime(n, p, e)}
        assert got == brute_pi_prime(n, p, e)
        assert pi_prime_count(n, p, e) == len(got)


# --- growth inequalities ----------------------------------------------------

def test_partition_lower_bound_9_to_10000():
    bad = [n for n in range(9, 10001)
           if not partition_count(n) > math.exp(2 * math.sqrt(n)) / 56]
    assert bad == []


def test_partition_upper_bound():
    c = 2 * math.pi / math.sqrt(6)
    bad = [j for j in range(1, 5001)
           if not partition_count(j) <= math.exp(c * math.sqrt(j))]
    assert bad == []


def test_hardy_ramanujan_window():
    for n in range(200, 2001, 100):
        ratio = partition_count(n) * 4 * math.sqrt(3) * n / math.exp(
            2 * math.pi * math.sqrt(n / 6))
        assert 0.8 < ratio < 1.2
