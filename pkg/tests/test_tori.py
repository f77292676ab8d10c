"""Maximal-torus exponents and semisimple order sets against the matrix oracle."""

import math

import pytest

from ordkit import liecat, oracle, partitions, tori
from ordkit.liecat import parse_group_id
from ordkit.tori import (
    bcd_torus_exp,
    exact_exp_bcd,
    gl_torus_exp,
    gu_torus_exp,
    go_torus_exp,
    ord_ss,
    oss_bar_simple,
    oss_simple,
    psl_torus_exp,
    sufficient_exponents,
    torus_exponents,
)


def test_gl_gu_single_part():
    for q in (2, 3, 4, 5, 7, 9):
        for n in (1, 2, 3, 5):
            assert gl_torus_exp(q, [n]) == q**n - 1
            assert gu_torus_exp(q, [n]) == q**n - (-1) ** n


def test_gl_gu_lcm_rule():
    assert gl_torus_exp(3, [2, 1]) == math.lcm(8, 2)
    assert gu_torus_exp(3, [2, 1]) == math.lcm(8, 4)
    assert gu_torus_exp(2, [3, 2, 1]) == math.lcm(9, 3, 3)


def test_psl_torus_exponents_psl2():
    # the three canonical tori of PSL2(q), q odd: (q-1)/2, (q+1)/2, p-part
    assert psl_torus_exp(7, 2, 1, [1, 1]) == 3
    assert psl_torus_exp(7, 2, 1, [2]) == 4
    assert psl_torus_exp(9, 2, 1, [1, 1]) == 4
    assert psl_torus_exp(9, 2, 1, [2]) == 5
    # even q: no center to quotient away
    assert psl_torus_exp(8, 2, 1, [1, 1]) == 7
    assert psl_torus_exp(8, 2, 1, [2]) == 9
    with pytest.raises(ValueError):
        psl_torus_exp(7, 3, 1, [2])  # weight mismatch


def test_psl_torus_exponent_divides_group_exponent():
    for q, dp1 in ((4, 3), (5, 3), (3, 4)):
        spec = oracle.MatrixGroupSpec("PSL", dp1, q)
        orders = oracle.element_order_set(spec)
        for lam in partitions.iter_all(dp1):
            e = psl_torus_exp(q, dp1, 1, lam)
            assert e in orders or any(e % o == 0 and o % e == 0 for o in orders)
            assert e in orders


def test_bcd_pair_exponent():
    # plain lcm, halved only for a one-part pair in odd characteristic
    assert bcd_torus_exp(3, ((2,), ()), 3) == 4     # (9-1)/2
    assert bcd_torus_exp(3, ((), (2,)), 3) == 5     # (9+1)/2
    assert bcd_torus_exp(3, ((1,), (1,)), 3) == 4   # lcm(2, 4), no halving
    assert bcd_torus_exp(2, ((2,), ()), 2) == 3     # even q: no halving
    with pytest.raises(ValueError):
        bcd_torus_exp(3, ((), ()), 3)


def test_exact_exp_bcd_against_oracle_b2():
    # Sp4(q) ~ B2(q): every pair exponent is realized as an element order
    for q in (3, 5):
        orders = oracle.element_order_set(oracle.MatrixGroupSpec("PSL", 2, q))
        # B2 tori for d = 1 degenerate to the PSL2 ones
        assert exact_exp_bcd("C", 1, q, ((1,), ())) in {(q - 1) // 2, q - 1}
    # GOodd(5, 3) realizes the B-family pair exponents
    odd_orders = oracle.element_order_set(
        oracle.MatrixGroupSpec("GOodd", 5, 3), semisimple=True)
    for pair in partitions.iter_admissible_pairs(2, "BC"):
        assert go_torus_exp(3, pair, "odd") in odd_orders


def test_ord_ss_against_matrix_oracle():
    for kind in ("GL", "GU"):
        for n in (1, 2, 3):
            for q in (2, 3, 4, 5):
                want = oracle.element_order_set(
                    oracle.MatrixGroupSpec(kind, n, q), semisimple=True)
                assert ord_ss(kind, n, q) == frozenset(want), (kind, n, q)


def test_ord_ss_orthogonal_against_oracle():
    cases = [("GOodd", 3, 3), ("GOodd", 5, 3), ("GOplus", 4, 3),
             ("GOminus", 4, 3), ("GOplus", 4, 2), ("GOminus", 4, 2),
             ("GOodd", 3, 5), ("GOplus", 2, 5), ("GOminus", 2, 5)]
    for kind, n, q in cases:
        want = oracle.element_order_set(
            oracle.MatrixGroupSpec(kind, n, q), semisimple=True)
        assert ord_ss(kind, n, q) == frozenset(want), (kind, n, q)


def test_ord_ss_degenerate_dimensions():
    assert ord_ss("GL", 0, 3) == frozenset({1})
    assert ord_ss("GOminus", 0, 3) == frozenset()
    assert ord_ss("GL", -2, 3) == frozenset()


def test_oss_recorded_counts():
    cases = {
        "A1(p=5,f=1)": (3, {1, 2, 3}),
        "A1(p=7,f=1)": (4, {1, 2, 3, 4}),
        "A2(p=2,f=2)": (4, {1, 3, 5, 7}),
        "2A3(p=3,f=1)": (6, {1, 2, 4, 5, 7, 8}),
        "2D5(p=3,f=1)": (20, None),
        "A6(p=13,f=1)": (305, None),
    }
    for key, (count, orders) in cases.items():
        got_count, got_set = oss_simple(parse_group_id(key))
        assert got_count == count, key
        if orders is not None:
            assert set(got_set) == orders, key


def test_oss_bar_counts():
    # tau-sums dominate the plain counts and match recorded small values
    assert oss_bar_simple(parse_group_id("A1(p=7,f=1)")) == 5
    assert oss_bar_simple(parse_group_id("2A2(p=3,f=1)")) == 9
    for key in ("A1(p=5,f=1)", "A2(p=2,f=2)", "2A3(p=3,f=1)"):
        S = parse_group_id(key)
        assert oss_bar_simple(S) >= oss_simple(S)[0]


def test_torus_exponents_cover_oss():
    # the per-class exponent list generates exactly the semisimple orders
    for key in ("A1(p=7,f=1)", "2A2(p=3,f=1)", "B2(p=3,f=1)"):
        S = parse_group_id(key)
        exps = torus_exponents(S)
        assert all(t.exponent >= 1 for t in exps)
        from ordkit.numkit import divisor_set
        union = set()
        for t in exps:
            union |= divisor_set(t.exponent)
        assert union == set(oss_simple(S)[1])


def test_sufficient_exponents_subset():
    for key in ("A1(p=7,f=1)", "2A2(p=3,f=1)", "B2(p=3,f=1)", "A2(p=5,f=1)"):
        S = parse_group_id(key)
        suff = sufficient_exponents(S)
        full = {t.exponent for t in torus_exponents(S)}
        assert set(suff) <= full
        from ordkit.numkit import divisor_set
        union = set()
        for e in suff:
            union |= divisor_set(e)
        assert union == set(oss_simple(S)[1])
