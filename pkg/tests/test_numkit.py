"""Arithmetic layer: factorization, divisor machinery, the lcm-set algebra."""

import math
import random

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from ordkit import numkit
from ordkit.numkit import (
    co_bd,
    divisor_set,
    factor,
    factor_pm,
    lambda_set,
    log_of_nat,
    loglog,
    mult_order,
    phi,
    psi,
    set_sharp_div,
    sharp_div,
    tau,
)

NEG_INF = float("-inf")


def test_factor_matches_sympy():
    rng = random.Random(11)
    for _ in range(200):
        n = rng.randrange(2, 10**7)
        assert factor(n) == dict(sympy.factorint(n))


def test_factor_pm_is_factor_of_shifted_power():
    rng = random.Random(13)
    for _ in range(60):
        q = rng.choice([2, 3, 4, 5, 7, 9, 11, 13])
        m = rng.randrange(1, 24)
        sign = rng.choice([1, -1])
        assert factor_pm(q, m, sign) == factor(q**m + sign)


def test_tau_and_phi_small_values():
    assert [tau(n) for n in (1, 2, 6, 12, 36, 720)] == [1, 2, 4, 6, 9, 30]
    assert [phi(n) for n in (1, 2, 6, 12, 97, 305, 521)] == [1, 1, 2, 4, 96, 240, 520]


def test_phi_multiplicative():
    rng = random.Random(17)
    for _ in range(200):
        a, b = rng.randrange(1, 4000), rng.randrange(1, 4000)
        if math.gcd(a, b) == 1:
            assert phi(a * b) == phi(a) * phi(b)


def test_divisor_set():
    assert divisor_set(1) == {1}
    assert divisor_set(28) == {1, 2, 4, 7, 14, 28}
    n = 2**4 * 3**2 * 5
    ds = divisor_set(n)
    assert len(ds) == tau(n)
    assert all(n % d == 0 for d in ds)


def test_mult_order():
    assert mult_order(2, 7) == 3
    assert mult_order(3, 1) == 1
    assert mult_order(10, 9) == 1
    assert mult_order(121, 305) == 2
    with pytest.raises(ValueError):
        mult_order(6, 9)
    rng = random.Random(19)
    for _ in range(200):
        q = rng.randrange(2, 50)
        m = rng.randrange(1, 2000)
        if math.gcd(q, m) != 1:
            continue
        k = mult_order(q, m)
        assert pow(q, k, m) == 1 % m
        assert all(pow(q, j, m) != 1 % m for j in range(1, k))


def test_log_of_nat_huge_inputs():
    assert log_of_nat(1) == 0.0
    assert log_of_nat(0) == NEG_INF
    assert math.isclose(log_of_nat(10**6), math.log(10**6))
    n = 7 ** 4000  # far beyond float range
    assert math.isclose(log_of_nat(n), 4000 * math.log(7), rel_tol=1e-12)


def test_loglog_conventions():
    assert math.isclose(loglog(10**6), math.log(math.log(10**6)))
    assert loglog(1) == NEG_INF          # inner log is 0
    assert loglog(0) == NEG_INF
    assert loglog(0.5) == NEG_INF        # inner log is negative
    assert math.isclose(loglog(2.0**40), math.log(40 * math.log(2)))


def test_is_prime_power_and_iteration():
    assert numkit.is_prime_power(1) is None
    assert numkit.is_prime_power(12) is None
    assert numkit.is_prime_power(121) == (11, 2)
    pps = list(numkit.iter_prime_powers(2, 30))
    assert pps == [2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 17, 19, 23, 25, 27, 29]


def test_factor_cache_roundtrip(tmp_path):
    path = str(tmp_path / "fc.bin")
    c = numkit.FactorCache(path)
    c.put(2**67 - 1, {193707721: 1, 761838257287: 1})
    c.put(720, factor(720))
    c.save()
    c2 = numkit.FactorCache(path)
    assert c2.get(720) == factor(720)
    assert c2.get(2**67 - 1) == {193707721: 1, 761838257287: 1}


def test_psi_values():
    assert [psi(k) for k in (0, 1, 2, 3, 4, 10)] == [1, 1, 2, 6, 12, 2520]


def test_co_bd_explicit():
    # divisors of 60 whose cofactor is at most 5
    assert co_bd(60, 5) == {12, 15, 20, 30, 60}
    assert co_bd(7, 1) == {7}


# --- lcm-set algebra properties --------------------------------------------

families = st.lists(
    st.lists(st.integers(min_value=1, max_value=10**6), min_size=1, max_size=4),
    min_size=0, max_size=5)


@settings(max_examples=1000, deadline=None)
@given(families, st.integers(min_value=1, max_value=10**6))
def test_lambda_set_commutes_with_sharp_div(fams, k):
    left = lambda_set([set_sharp_div(f, k) for f in fams])
    right = set_sharp_div(lambda_set(fams), k)
    assert left == right


@settings(max_examples=1000, deadline=None)
@given(st.integers(min_value=1, max_value=10**5),
       st.lists(st.integers(min_value=1, max_value=10**4), min_size=1, max_size=5))
def test_lcm_of_scaled_divisors_lands_in_scaled_divisor_set(n, scalars):
    ds = sorted(divisor_set(n))
    rng = random.Random(n + sum(scalars))
    ms = [rng.choice(ds) for _ in scalars]
    a = math.lcm(*scalars)
    v = math.lcm(*[s * m for s, m in zip(scalars, ms)])
    assert v % a == 0 and v // a in divisor_set(n)


@settings(max_examples=1000, deadline=None)
@given(st.integers(min_value=1, max_value=10**5),
       st.integers(min_value=1, max_value=10**5),
       st.integers(min_value=1, max_value=10**5))
def test_sharp_div_of_product(m, t, a):
    v = sharp_div(m * t, a)
    w = sharp_div(t, a)
    assert v % w == 0 and m % (v // w) == 0


@settings(max_examples=1000, deadline=None)
@given(st.integers(min_value=1, max_value=10**5),
       st.integers(min_value=1, max_value=10**5),
       st.integers(min_value=1, max_value=10**4),
       st.floats(min_value=1.0, max_value=50.0))
def test_co_bd_respects_sharp_div_and_lcm(f1, f2, a, h):
    for g in co_bd(f1, h):
        assert sharp_div(g, a) in co_bd(sharp_div(f1, a), h)
    # lcm of per-modulus picks stays within the Psi-widened set of the lcm
    rng = random.Random(f1 * 31 + f2)
    g1 = rng.choice(sorted(co_bd(f1, h)))
    g2 = rng.choice(sorted(co_bd(f2, h)))
    assert math.lcm(g1, g2) in co_bd(math.lcm(f1, f2), psi(math.floor(h)))
