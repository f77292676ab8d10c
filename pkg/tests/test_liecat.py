"""Group catalog: identifiers, orders, outer bounds, reference tables."""

import math
from fractions import Fraction

import pytest

from ordkit import bounds, liecat
from ordkit.liecat import (
    LieGroupId,
    REFERENCE_EPS_DIVERGENT,
    aliases,
    inndiag_index,
    iter_catalog,
    monster_order,
    order_of,
    order_upper_bound,
    out_order,
    parse_group_id,
    reference_exact_table,
    sporadic_record,
    sporadic_table,
)


def test_parse_roundtrip_over_catalog():
    for S in iter_catalog(5, 9):
        assert parse_group_id(S.spec_string()) == S


def test_parse_rejections():
    for bad in ["Q5(p=2,f=1)", "A3(p=6,f=1)", "A3(p=2,f=0)", "A0(p=5,f=1)",
                "2B2(p=2,f=1)", "2G2(p=2,f=3/2)", "2B2(p=3,f=3/2)"]:
        with pytest.raises(ValueError):
            parse_group_id(bad)


def test_known_orders():
    cases = {
        "A1(p=2,f=2)": 60,
        "A1(p=7,f=1)": 168,
        "A1(p=3,f=2)": 360,
        "A2(p=5,f=1)": 372000,
        "2A2(p=3,f=1)": 6048,
        "2A3(p=3,f=1)": 3265920,
        "B2(p=3,f=1)": 25920,
        "2B2(p=2,f=3/2)": 29120,
        "G2(p=3,f=1)": 4245696,
        "2G2(p=3,f=3/2)": 10073444472,
    }
    for key, order in cases.items():
        assert order_of(parse_group_id(key)) == order


def test_nonsimple_parameters_guarded():
    for key in ["A1(p=2,f=1)", "A1(p=3,f=1)", "2A2(p=2,f=1)", "2B2(p=2,f=1/2)"]:
        S = parse_group_id(key)
        with pytest.raises(ValueError):
            order_of(S)
        assert order_of(S, allow_nonsimple=True) >= 1


def test_order_upper_bound_catalog_sweep():
    for S in iter_catalog(5, 9):
        order = order_of(S, allow_nonsimple=True)
        assert order <= order_upper_bound(S)
        qreal = S.q if S.f_den == 1 else S.q2 ** 0.5
        assert order_upper_bound(S) <= qreal ** (4 * S.d * S.d) * 1.000001


def test_out_orders():
    cases = {
        "A1(p=3,f=2)": 4,
        "A1(p=7,f=1)": 2,
        "2A3(p=3,f=1)": 8,
        "B2(p=3,f=1)": 2,
        "2B2(p=2,f=3/2)": 3,
        "2G2(p=3,f=3/2)": 3,
        "D4(p=2,f=1)": 6,
    }
    for key, out in cases.items():
        assert out_order(parse_group_id(key)) == out


def test_out_order_within_log2_of_order():
    for S in iter_catalog(6, 9):
        try:
            order = order_of(S)
        except ValueError:
            continue
        assert out_order(S) <= math.log2(order)


def test_inndiag_index_samples():
    assert inndiag_index(parse_group_id("A2(p=5,f=1)")) == 1
    assert inndiag_index(parse_group_id("A2(p=7,f=1)")) == 3
    assert inndiag_index(parse_group_id("2A3(p=3,f=1)")) == 4
    assert inndiag_index(parse_group_id("B2(p=3,f=1)")) == 2
    assert inndiag_index(parse_group_id("D4(p=3,f=1)")) == 4


def test_aliases_consistent_orders():
    for row in aliases():
        orders = set()
        for k in row:
            if k.startswith("Alt("):
                n = int(k[4:-1])
                orders.add(math.factorial(n) // 2)
            else:
                orders.add(order_of(parse_group_id(k)))
        assert len(orders) == 1, row


# --- recorded tables --------------------------------------------------------

def test_sporadic_table_shape():
    table = sporadic_table()
    assert len(table) == 27
    names = [r.name for r in table]
    assert names[0] == "M11" and "M" in names and "T" in names
    m = sporadic_record("M")
    assert m.order == monster_order()
    assert m.o_count == 73 and m.omega_count == 194


def test_sporadic_epsilons_recompute():
    for rec in sporadic_table():
        eps_o = bounds.eps_omega(rec.omega_count, rec.order)
        eps_q = bounds.eps_q(Fraction(rec.omega_count, rec.o_count), rec.order)
        assert abs(eps_o - rec.eps_omega_ref) < 1e-5, rec.name
        assert abs(eps_q - rec.eps_q_ref) < 1e-5, rec.name


def test_monster_constants():
    assert len(str(monster_order())) == 54
    assert abs(bounds.EPS_Q_MONSTER - 0.114045) < 1e-5
    assert abs(bounds.C_MONSTER - 8.76843) < 1e-5
    # the Monster minimizes eps_q across the sporadic table
    assert bounds.EPS_Q_MONSTER == min(
        bounds.eps_q(Fraction(r.omega_count, r.o_count), r.order)
        for r in sporadic_table())


def test_exact_value_table_recomputes():
    seen = 0
    for rec in reference_exact_table():
        if not rec.simple or rec.group in REFERENCE_EPS_DIVERGENT:
            continue
        S = parse_group_id(rec.group)
        eps = bounds.eps_q(Fraction(rec.omega, rec.o), order_of(S))
        assert abs(eps - rec.eps_q_ref) < 1e-5, rec.group
        seen += 1
    assert seen >= 40


def test_exact_value_divergent_rows_are_registered():
    rows = {r.group: r for r in reference_exact_table()}
    for key in REFERENCE_EPS_DIVERGENT:
        rec = rows[key]
        S = parse_group_id(rec.group)
        eps = bounds.eps_q(Fraction(rec.omega, rec.o), order_of(S))
        # registered rows really do disagree with their recorded column
        assert abs(eps - rec.eps_q_ref) >= 1e-5, rec.group
