"""Brute-force enumeration oracles: fields, matrix groups, permutations."""

import math

import pytest

from ordkit import oracle
from ordkit.oracle import GF, MatrixGroupSpec, element_order_set, field, perm_order_set


def mul_order(gf, x):
    acc, k = x, 1
    while acc != 1:
        acc, k = int(gf.MUL[acc, x]), k + 1
    return k


def test_field_arithmetic_gf4():
    gf = field(4)
    assert gf.q == 4 and gf.p == 2
    for x in range(4):
        assert gf.ADD[x, x] == 0          # characteristic 2
        assert gf.MUL[1, x] == x          # 1 is the unit
        assert gf.MUL[0, x] == 0
    assert sorted(mul_order(gf, x) for x in range(1, 4)) == [1, 3, 3]


def test_field_arithmetic_gf9():
    gf = field(9)
    # field axioms on the lookup tables
    for x in range(9):
        for y in range(9):
            assert gf.ADD[x, y] == gf.ADD[y, x]
            assert gf.MUL[x, y] == gf.MUL[y, x]
            if y:
                assert gf.MUL[gf.MUL[x, y], gf.INV[y]] == x
    # multiplicative group is cyclic of order 8
    assert sorted({mul_order(gf, x) for x in range(1, 9)}) == [1, 2, 4, 8]


def test_group_orders():
    assert MatrixGroupSpec("GL", 2, 2).group_order() == 6
    assert MatrixGroupSpec("GL", 2, 3).group_order() == 48
    assert MatrixGroupSpec("GU", 2, 2).group_order() == 18
    assert MatrixGroupSpec("PSL", 2, 7).group_order() == 168


def test_element_order_sets_small():
    assert element_order_set(MatrixGroupSpec("GL", 2, 2)) == {1, 2, 3}
    assert element_order_set(MatrixGroupSpec("PSL", 2, 5)) == {1, 2, 3, 5}
    assert element_order_set(MatrixGroupSpec("PSL", 2, 7)) == {1, 2, 3, 4, 7}
    # semisimple filter drops exactly the multiples of the characteristic
    full = element_order_set(MatrixGroupSpec("GL", 2, 3))
    ss = element_order_set(MatrixGroupSpec("GL", 2, 3), semisimple=True)
    assert ss == {o for o in full if o % 3 != 0}


def test_enumeration_guard():
    with pytest.raises(ValueError):
        element_order_set(MatrixGroupSpec("GL", 5, 11))


def test_perm_order_set():
    assert perm_order_set("Sym", 4) == {1, 2, 3, 4}
    assert perm_order_set("Alt", 4) == {1, 2, 3}
    assert perm_order_set("Sym", 7) == {1, 2, 3, 4, 5, 6, 7, 10, 12}
    with pytest.raises(ValueError):
        perm_order_set("Sym", 13)
    with pytest.raises(ValueError):
        perm_order_set("Dih", 5)
