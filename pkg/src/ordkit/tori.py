"""Maximal-torus exponents and semisimple element orders, classical types.

Torus classes are indexed by partitions (linear/unitary) or partition
pairs (symplectic/orthogonal).  Isometry-group exponents are plain lcms
of the q^m -+ 1 factors; inside the simple quotient the exponent shrinks
by center and spinor-kernel effects, which are reproduced exactly here:
the d1 formula stays available as the divisor-correct upper bound, and
the exact value is what ossSimple unions (the refined order counts
downstream are pinned to exact values).
"""

from __future__ import annotations

import math
from itertools import product as _iproduct
from typing import Dict, FrozenSet, NamedTuple, Sequence, Tuple

from .liecat import LieGroupId
from .numkit import (
    default_cache,
    divisor_set,
    factor_pm,
    is_prime_power,
    nu_p,
    tau,
)
from .partitions import iter_admissible_pairs, iter_reduced

__all__ = [
    "TorusExp",
    "gl_torus_exp",
    "gu_torus_exp",
    "go_torus_exp",
    "psl_torus_exp",
    "bcd_torus_exp",
    "exact_exp_bcd",
    "ord_ss",
    "torus_exponents",
    "sufficient_exponents",
    "oss_simple",
    "oss_bar_simple",
    "classical_key",
]

Partition = Tuple[int, ...]
PartitionPair = Tuple[Partition, Partition]


class TorusExp(NamedTuple):
    label: object  # Partition or PartitionPair
    exponent: int


def _check_q(q: int) -> None:
    if q < 2 or is_prime_power(q) is None:
        raise ValueError(f"q={q} is not a prime power >= 2")


def _odd_part(n: int) -> int:
    return n >> nu_p(2, n)


# ---------------------------------------------------------------------------
# isometry-group torus exponents (plain lcm)

def gl_torus_exp(q: int, lam: Sequence[int]) -> int:
    _check_q(q)
    if not lam:
        raise ValueError("empty partition")
    return math.lcm(*[q ** n - 1 for n in lam])


def gu_torus_exp(q: int, lam: Sequence[int]) -> int:
    _check_q(q)
    if not lam:
        raise ValueError("empty partition")
    return math.lcm(*[q ** n - (-1) ** n for n in lam])


def go_torus_exp(q: int, pair: PartitionPair, variant: str) -> int:
    _check_q(q)
    lam_plus, lam_minus = pair
    if variant not in ("odd", "evenPlus", "evenMinus"):
        raise ValueError(f"unknown variant {variant!r}")
    if variant == "evenPlus" and len(lam_minus) % 2 != 0:
        raise ValueError("parity violation: evenPlus needs an even number of minus parts")
    if variant == "evenMinus" and len(lam_minus) % 2 != 1:
        raise ValueError("parity violation: evenMinus needs an odd number of minus parts")
    ms = [q ** n - 1 for n in lam_plus] + [q ** n + 1 for n in lam_minus]
    if not ms:
        raise ValueError("empty partition pair")
    return math.lcm(*ms)


# ---------------------------------------------------------------------------
# simple-group torus exponents

def psl_torus_exp(q: int, d_plus_one: int, eps: int, lam: Sequence[int]) -> int:
    """Exact exponent of T_lam within PSL (eps=+1) or PSU (eps=-1)."""
    _check_q(q)
    if eps not in (1, -1):
        raise ValueError("eps must be +1 or -1")
    if sum(lam) != d_plus_one:
        raise ValueError(f"partition {lam} does not sum to {d_plus_one}")
    t = len(lam)
    d1 = math.lcm(*[q ** n - eps ** n for n in lam])
    if t > 2:
        return d1
    if t == 2:
        g = math.gcd(lam[0], lam[1])
        return d1 // math.gcd(d_plus_one // g, q - eps)
    return d1 // (math.gcd(d_plus_one, q - eps) * (q - eps))


def bcd_torus_exp(q: int, pair: PartitionPair, p: int) -> int:
    """d1 of a symplectic/orthogonal pair: the plain lcm, halved for a
    single-part pair in odd characteristic (the lcm is even there)."""
    _check_q(q)
    lam_plus, lam_minus = pair
    ms = [q ** n - 1 for n in lam_plus] + [q ** n + 1 for n in lam_minus]
    if not ms:
        raise ValueError("empty partition pair")
    e = math.lcm(*ms)
    if len(ms) == 1 and p > 2:
        assert e % 2 == 0
        return e // 2
    return e


def _exp_in_quotient(ms: Sequence[int], parity_kernel: bool, center_quotient: bool) -> int:
    """Largest element order in (parity kernel of prod Z_mi) / <-I>.

    All mi even (odd q).  Per coordinate the candidate orders are mi,
    mi/2 and the odd part of mi; the kernel constraint fixes the parity
    of the number of coordinates at full 2-adic height, and dividing by
    -I halves the lcm exactly when every coordinate attains its 2-part.
    """
    cand = [sorted({m, m // 2, _odd_part(m)}) for m in ms]
    best = 1
    for ds in _iproduct(*cand):
        if parity_kernel:
            full = sum(1 for d, m in zip(ds, ms) if nu_p(2, d) == nu_p(2, m))
            if full % 2:
                continue
        n = math.lcm(*ds)
        if center_quotient and n % 2 == 0 and all(nu_p(2, d) == nu_p(2, n) for d in ds):
            n //= 2
        if n > best:
            best = n
    return best


def exact_exp_bcd(family: str, d: int, q: int, pair: PartitionPair) -> int:
    """Exact Exp(T cap S) for S simple of type B_d, C_d, D_d or 2D_d."""
    lam_plus, lam_minus = pair
    ms = [q ** n - 1 for n in lam_plus] + [q ** n + 1 for n in lam_minus]
    if not ms:
        return 1
    if q % 2 == 0:
        return math.lcm(*ms)
    if family == "C":
        return _exp_in_quotient(ms, parity_kernel=False, center_quotient=True)
    if family == "B":
        return _exp_in_quotient(ms, parity_kernel=True, center_quotient=False)
    if family not in ("D", "2D"):
        raise ValueError(f"not a BCD family: {family!r}")
    eps = 1 if family == "D" else -1
    minus_one_in = (q ** d - eps) % 4 == 0
    return _exp_in_quotient(ms, parity_kernel=True, center_quotient=minus_one_in)


# ---------------------------------------------------------------------------
# semisimple order sets

def ord_ss(kind: str, n: int, q: int) -> FrozenSet[int]:
    """Semisimple element orders of the isometry group.

    Degenerate dimensions follow the conventions the recursive order
    bounds rely on: dimension 0 gives {1} except GOminus (empty), and
    negative dimension gives the empty set.
    """
    if kind not in ("GL", "GU", "GOodd", "GOplus", "GOminus"):
        raise ValueError(f"unknown isometry kind {kind!r}")
    if n < 0:
        return frozenset()
    _check_q(q)
    orders = set()
    if kind in ("GL", "GU"):
        eps = 1 if kind == "GL" else -1
        for lam in iter_reduced(n):
            e = math.lcm(*[q ** k - eps ** k for k in lam]) if lam else 1
            orders |= divisor_set(e)
        return frozenset(orders)
    if kind == "GOodd":
        if n % 2 == 0:
            raise ValueError("GOodd needs odd dimension")
        pairs = iter_admissible_pairs((n - 1) // 2, "BC")
    else:
        if n % 2 != 0:
            raise ValueError("even orthogonal kinds need even dimension")
        pairs = iter_admissible_pairs(n // 2, "Dplus" if kind == "GOplus" else "Dminus")
    for lam_plus, lam_minus in pairs:
        ms = [q ** k - 1 for k in lam_plus] + [q ** k + 1 for k in lam_minus]
        e = math.lcm(*ms) if ms else 1
        orders |= divisor_set(e)
    return frozenset(orders)


def classical_key(S: LieGroupId) -> str:
    """A, 2A, B, C, D or 2D; rejects everything else."""
    fam, tw = S.family, S.twist
    if S.f_den == 2 or fam not in ("A", "B", "C", "D"):
        raise ValueError(f"{S.display()} is out of scope for torus data")
    if fam == "A":
        return "A" if tw == 1 else "2A"
    if fam in ("B", "C"):
        return fam
    if tw == 3:
        raise ValueError(f"{S.display()} is out of scope for torus data")
    return "D" if tw == 1 else "2D"


def torus_exponents(S: LieGroupId) -> Tuple[TorusExp, ...]:
    """Exact Exp(T cap S) per admissible torus class."""
    key = classical_key(S)
    d, q = S.d, S.q
    out = []
    if key in ("A", "2A"):
        eps = 1 if key == "A" else -1
        for lam in iter_reduced(d + 1):
            out.append(TorusExp(lam, psl_torus_exp(q, d + 1, eps, lam)))
    else:
        fam = {"B": "BC", "C": "BC", "D": "Dplus", "2D": "Dminus"}[key]
        for pair in iter_admissible_pairs(d, fam):
            out.append(TorusExp(pair, exact_exp_bcd(key, d, q, pair)))
    return tuple(out)


def sufficient_exponents(S: LieGroupId) -> Tuple[int, ...]:
    """Sorted distinct exponent values; every semisimple order divides one."""
    return tuple(sorted({t.exponent for t in torus_exponents(S)}))


def oss_simple(S: LieGroupId) -> Tuple[int, FrozenSet[int]]:
    """(count, set) of semisimple element orders of the simple group."""
    orders = set()
    for e in sufficient_exponents(S):
        orders |= divisor_set(e)
    return len(orders), frozenset(orders)


def oss_bar_simple(S: LieGroupId) -> int:
    """Sum of tau(Exp(T cap S)) over admissible torus classes.

    At least the order count (each class contributes its divisor count
    without de-duplication).  Linear type over q=2 takes a subset walk
    with merged factorizations so rank 90 stays tractable.
    """
    key = classical_key(S)
    if key == "A" and S.q == 2:
        return _bar_sum_linear_q2(S.d + 1)
    return sum(tau(t.exponent) for t in torus_exponents(S))


def _bar_sum_linear_q2(n: int) -> int:
    """tau-sum over reduced partitions of n for linear type, q=2.

    Here the center corrections are trivial (q-1 = 1) and parts equal
    to 1 contribute nothing to the lcm, so a reduced partition is just
    a set of distinct parts >= 2 with weight <= n, padded by 1s.  Walk
    those sets largest-part-first, merging prime factorizations of
    2^part - 1 and taking tau at every node.
    """
    cache = default_cache()
    fmaps: Dict[int, Dict[int, int]] = {
        m: factor_pm(2, m, -1, cache) for m in range(2, n + 1)
    }
    total = 0

    def walk(max_next: int, budget: int, merged: Dict[int, int]) -> None:
        nonlocal total
        t = 1
        for e in merged.values():
            t *= e + 1
        total += t
        for part in range(min(max_next, budget), 1, -1):
            child = dict(merged)
            for prime, e in fmaps[part].items():
                if child.get(prime, 0) < e:
                    child[prime] = e
            walk(part - 1, budget - part, child)

    walk(n, n, {})
    return total
