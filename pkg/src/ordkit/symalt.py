"""Element orders and orbit counts for Sym(n) and Alt(n).

o(Sym(n)) counts the distinct lcms of partitions of n, which equals the
number of partitions of some k <= n into prime powers greater than 1 with
pairwise distinct primes.  Two implementations are kept: a memoized
recursion indexed by (k, prime index) for single queries and a
descending-prime table for the big scans; they are cross-checked in the
tests.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import List, Set, Tuple

from sympy import primerange

from .numkit import log_of_nat, loglog

__all__ = [
    "SymAltProfile",
    "sym_order_count",
    "sym_order_table",
    "erdos_turan_scan",
    "second_bound_scan",
    "alt_order_set",
    "alt_order_count",
    "even_partition_count",
    "odd_partition_count",
    "alt_profile",
    "eps_omega_alt",
    "eps_q_alt",
]

_PRIMES: List[int] = [2, 3, 5, 7]


def _prime(i: int) -> int:
    while i >= len(_PRIMES):
        lo = _PRIMES[-1] + 1
        _PRIMES.extend(primerange(lo, 2 * lo + 16))
    return _PRIMES[i]


@lru_cache(maxsize=None)
def _r_from(k: int, i: int) -> int:
    """Partitions of k into prime powers > 1, pairwise distinct primes,
    all primes of index >= i."""
    if k == 0:
        return 1
    total = 0
    j = i
    while True:
        p = _prime(j)
        if p > k:
            return total
        pe = p
        while pe <= k:
            total += _r_from(k - pe, j + 1)
            pe *= p
        j += 1


def sym_order_count(n: int) -> int:
    """Number of distinct element orders of Sym(n)."""
    if n < 0:
        raise ValueError("n must be >= 0")
    return sum(_r_from(k, 0) for k in range(n + 1))


def sym_order_table(limit: int) -> List[int]:
    """o(Sym(n)) for all 0 <= n < limit, via one descending-prime pass.

    ways[k] after processing primes >= p counts the coprime prime-power
    partitions of k using only those primes; processing descends so each
    prime is consumed at most once.
    """
    if limit < 1:
        return []
    top = limit - 1
    ways = [0] * (top + 1)
    ways[0] = 1
    for p in reversed(list(primerange(2, top + 1))):
        new = ways[:]
        pe = p
        while pe <= top:
            for k in range(pe, top + 1):
                new[k] += ways[k - pe]
            pe *= p
        ways = new
    out = []
    run = 0
    for k in range(top + 1):
        run += ways[k]
        out.append(run)
    return out


def erdos_turan_scan(limit: int) -> List[int]:
    """All n < limit violating o(Sym(n)) <= exp(sqrt(n)); expected empty."""
    if limit < 1:
        return []
    table = sym_order_table(limit)
    return [n for n in range(limit) if log_of_nat(table[n]) > math.sqrt(n)]


def second_bound_scan(limit: int) -> List[int]:
    """All 7 <= n <= limit violating
    o(Sym(n)) <= (n+1)·sqrt(2n)·exp(pi·sqrt(n/3)); expected empty."""
    table = sym_order_table(limit + 1)
    out = []
    for n in range(7, limit + 1):
        rhs = math.log(n + 1) + 0.5 * math.log(2 * n) + math.pi * math.sqrt(n / 3)
        if log_of_nat(table[n]) > rhs:
            out.append(n)
    return out


# ---------------------------------------------------------------------------
# alternating groups

def alt_order_set(n: int) -> Set[int]:
    """Exact element-order set of Alt(n).

    With s(L) = sum of the maximal prime-power divisors of L: a minimal
    permutation of order L uses cycles of exactly those lengths, and its
    sign is even iff L is odd (each odd part contributes evenly).  An even
    L is repaired by one extra 2-cycle, which is also the cheapest repair,
    so L lies in Alt(n) iff s(L) <= n for odd L and s(L)+2 <= n for even.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    primes = list(primerange(2, n + 1))
    out: Set[int] = set()

    def dfs(i: int, used: int, lcm_val: int) -> None:
        pad = 2 if lcm_val % 2 == 0 else 0
        if used + pad <= n:
            out.add(lcm_val)
        for j in range(i, len(primes)):
            p = primes[j]
            pe = p
            while used + pe <= n:
                dfs(j + 1, used + pe, lcm_val * pe)
                pe *= p

    dfs(0, 0, 1)
    return out


def alt_order_count(n: int) -> int:
    return len(alt_order_set(n))


def _partition_parity_counts(n: int) -> Tuple[int, int]:
    # (even, odd) sign counts; sign is (-1)^(n - #parts)
    counts = [[0, 0] for _ in range(n + 1)]
    counts[0][0] = 1
    for size in range(1, n + 1):
        for m in range(size, n + 1):
            counts[m][0] += counts[m - size][1]
            counts[m][1] += counts[m - size][0]
    # counts[n][t] = partitions with #parts ≡ t (mod 2)
    even = counts[n][n % 2]
    odd = counts[n][(n + 1) % 2]
    return even, odd


def even_partition_count(n: int) -> int:
    """Partitions of n whose permutations are even; ω(Alt(n)) for n >= 7."""
    if 1 <= n <= 6:
        raise ValueError("exceptional small degree")
    if n < 1:
        raise ValueError("n must be >= 7")
    return _partition_parity_counts(n)[0]


def odd_partition_count(n: int) -> int:
    if 1 <= n <= 6:
        raise ValueError("exceptional small degree")
    if n < 1:
        raise ValueError("n must be >= 7")
    return _partition_parity_counts(n)[1]


@dataclass(frozen=True)
class SymAltProfile:
    n: int
    omega_sym: int
    o_sym: int
    omega_alt: int
    o_alt: int


def alt_profile(n: int) -> SymAltProfile:
    if n < 7:
        raise ValueError("exceptional small degree")
    from .partitions import partition_count

    return SymAltProfile(
        n=n,
        omega_sym=partition_count(n),
        o_sym=sym_order_count(n),
        omega_alt=even_partition_count(n),
        o_alt=alt_order_count(n),
    )


# ω and o for the two degrees with exceptional automorphisms
_ALT_SMALL = {5: (4, 4), 6: (5, 5)}


def _alt_invariants(n: int) -> Tuple[int, int]:
    if n in _ALT_SMALL:
        return _ALT_SMALL[n]
    return even_partition_count(n), alt_order_count(n)


def eps_omega_alt(n: int) -> float:
    """loglog ω(Alt(n)) / loglog |Alt(n)|."""
    if n < 5:
        raise ValueError("n must be >= 5")
    omega, _ = _alt_invariants(n)
    return loglog(omega) / loglog(math.factorial(n) // 2)


def eps_q_alt(n: int) -> float:
    """loglog(ω/o + 3) / loglog |Alt(n)| with exact ω, o."""
    if n < 5:
        raise ValueError("n must be >= 5")
    omega, o = _alt_invariants(n)
    return loglog(omega / o + 3) / loglog(math.factorial(n) // 2)
