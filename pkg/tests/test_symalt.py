"""Symmetric and alternating groups: order counts and orbit counts."""

import math

import pytest

from ordkit import oracle, partitions, symalt
from ordkit.symalt import (
    alt_order_count,
    alt_order_set,
    alt_profile,
    erdos_turan_scan,
    eps_omega_alt,
    eps_q_alt,
    even_partition_count,
    odd_partition_count,
    second_bound_scan,
    sym_order_count,
    sym_order_table,
)


def brute_sym_order_count(n):
    return len({math.lcm(*lam) for lam in partitions.iter_all(n)}) if n else 1


def test_sym_order_count_against_brute_force():
    for n in range(0, 26):
        assert sym_order_count(n) == brute_sym_order_count(n)


def test_sym_order_table_consistent():
    table = sym_order_table(40)
    assert len(table) == 40
    assert table == [sym_order_count(n) for n in range(40)]


def test_sym_orders_against_permutation_oracle():
    for n in range(1, 13):
        assert sym_order_count(n) == len(oracle.perm_order_set("Sym", n))


def test_growth_scans_empty_below_2000():
    assert erdos_turan_scan(2000) == []
    assert second_bound_scan(600) == []


def test_alt_order_set_against_oracle():
    for n in range(1, 13):
        assert set(alt_order_set(n)) == oracle.perm_order_set("Alt", n)


def test_alt_order_count_small():
    assert alt_order_count(5) == 4          # 1, 2, 3, 5
    assert alt_order_count(7) == 7
    assert alt_order_count(12) == len(oracle.perm_order_set("Alt", 12))


def test_partition_parity_split():
    for n in range(7, 26):
        ev, od = even_partition_count(n), odd_partition_count(n)
        assert ev + od == partitions.partition_count(n)
        assert ev > od  # even classes dominate from degree 7 on
    with pytest.raises(ValueError):
        even_partition_count(5)


def test_omega_alt_against_cycle_type_oracle():
    # orbits of Aut(Alt(n)) = Sym(n) on Alt(n) are the even cycle types
    # (n >= 7), enumerable directly for small n
    for n in range(7, 13):
        even = sum(1 for lam in partitions.iter_all(n)
                   if (n - len(lam)) % 2 == 0)
        assert alt_profile(n).omega_alt == even


def test_alt43_profile():
    prof = alt_profile(43)
    assert prof.omega_alt == 31659
    assert prof.o_alt == 559


def test_recorded_epsilon_values():
    assert abs(eps_q_alt(11) - 0.160121) < 1e-5
    assert abs(eps_omega_alt(5) - 0.231720) < 1e-5
    # the degree-5 omega value is the global threshold constant
    from ordkit import bounds
    assert eps_omega_alt(5) == bounds.EPS_OMEGA_ALT5


def test_profile_fields_agree_with_components():
    prof = alt_profile(9)
    assert prof.o_sym == sym_order_count(9)
    assert prof.o_alt == alt_order_count(9)
    assert prof.omega_alt == even_partition_count(9)
    assert prof.omega_sym == partitions.partition_count(9)
