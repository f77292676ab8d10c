"""Integer partition counting and enumeration.

p(n) by the pentagonal recurrence, distinct-part counts s(n), reduced
partitions and their closure map, admissible partition pairs for the
classical torus catalogues, the bounded-part counts pi(n, p, e) and
pi'(n, p, e), and the pair-count bound g2(d).
"""

from __future__ import annotations

import math
from functools import lru_cache
from typing import Iterator, List, Tuple

Partition = Tuple[int, ...]
PartitionPair = Tuple[Partition, Partition]

__all__ = [
    "partition_count",
    "distinct_partition_count",
    "is_reduced",
    "is_almost_reduced",
    "reduced_closure",
    "iter_all",
    "iter_distinct",
    "iter_reduced",
    "iter_admissible_pairs",
    "g2",
    "pi_count",
    "pi_prime_count",
    "iter_pi_prime",
]

_pcache: List[int] = [1]


def partition_count(n: int) -> int:
    """p(n), the number of unordered partitions of n; p(0) = 1."""
    assert n >= 0
    while len(_pcache) <= n:
        m = len(_pcache)
        total = 0
        k = 1
        while True:
            g1 = k * (3 * k - 1) // 2
            g2_ = k * (3 * k + 1) // 2
            if g1 > m and g2_ > m:
                break
            sign = 1 if k % 2 == 1 else -1
            if g1 <= m:
                total += sign * _pcache[m - g1]
            if g2_ <= m:
                total += sign * _pcache[m - g2_]
            k += 1
        _pcache.append(total)
    return _pcache[n]


@lru_cache(maxsize=None)
def distinct_partition_count(n: int) -> int:
    """s(n), the number of partitions of n into pairwise distinct parts."""
    assert n >= 0
    total = 0
    r = 0
    while r * (r + 1) // 2 <= n:
        rest = n - r * (r + 1) // 2
        if rest % 2 == 0:
            total += partition_count(rest // 2)
        r += 1
    return total


def is_reduced(parts: Partition) -> bool:
    """Every part larger than 1 occurs at most once."""
    seen = set()
    for k in parts:
        if k > 1:
            if k in seen:
                return False
            seen.add(k)
    return True


def is_almost_reduced(parts: Partition) -> bool:
    """Reduced except that the part 2 may occur exactly twice."""
    mult = {}
    for k in parts:
        if k > 1:
            mult[k] = mult.get(k, 0) + 1
    for k, m in mult.items():
        if m > 1 and (k, m) != (2, 2):
            return False
    return True


def reduced_closure(parts: Partition) -> Partition:
    """Keep one copy of each part > 1 and convert the excess into 1s."""
    parts = tuple(sorted(parts, reverse=True))
    kept = []
    ones = 0
    seen = set()
    for k in parts:
        if k == 1:
            ones += 1
        elif k in seen:
            ones += k
        else:
            seen.add(k)
            kept.append(k)
    out = tuple(kept) + (1,) * ones
    assert sum(out) == sum(parts) and is_reduced(out)
    return out


def iter_all(n: int, max_part: int = None) -> Iterator[Partition]:
    """All partitions of n, parts bounded by max_part, lexicographically
    descending.  n = 0 yields the empty partition."""
    assert n >= 0
    if max_part is None or max_part > n:
        max_part = n

    def rec(rest: int, cap: int, prefix: Tuple[int, ...]):
        if rest == 0:
            yield prefix
            return
        for k in range(min(cap, rest), 0, -1):
            yield from rec(rest - k, k, prefix + (k,))

    yield from rec(n, max_part, ())


def iter_distinct(n: int) -> Iterator[Partition]:
    """Partitions of n into pairwise distinct parts."""
    assert n >= 0

    def rec(rest: int, cap: int, prefix: Tuple[int, ...]):
        if rest == 0:
            yield prefix
            return
        for k in range(min(cap, rest), 0, -1):
            yield from rec(rest - k, k - 1, prefix + (k,))

    yield from rec(n, n, ())


def iter_reduced(n: int) -> Iterator[Partition]:
    """Reduced partitions of n: distinct parts > 1 padded with 1s."""
    assert n >= 0

    def rec(rest: int, cap: int, prefix: Tuple[int, ...]):
        # close off with 1s at any point
        yield prefix + (1,) * rest
        for k in range(min(cap, rest), 1, -1):
            yield from rec(rest - k, k - 1, prefix + (k,))

    yield from rec(n, n, ())


def _iter_almost_reduced(n: int) -> Iterator[Partition]:
    """Reduced partitions of n plus those with the double part (2, 2)."""
    yield from iter_reduced(n)
    if n >= 4:
        for tail in iter_reduced(n - 4):
            if 2 not in tail:
                merged = tuple(sorted((2, 2) + tail, reverse=True))
                yield merged


def iter_admissible_pairs(d: int, family: str) -> Iterator[PartitionPair]:
    """Pairs (plus, minus) of total weight d indexing classical torus classes.

    BC:     both entries reduced.
    Dplus:  plus reduced; minus almost reduced with an even number of parts.
    Dminus: plus reduced; minus almost reduced with an odd number of parts.
    """
    assert d >= 0
    if family == "BC":
        for w_plus in range(d + 1):
            for lp in iter_reduced(w_plus):
                for lm in iter_reduced(d - w_plus):
                    yield (lp, lm)
    elif family in ("Dplus", "Dminus"):
        want = 0 if family == "Dplus" else 1
        for w_plus in range(d + 1):
            for lp in iter_reduced(w_plus):
                for lm in _iter_almost_reduced(d - w_plus):
                    if len(lm) % 2 == want:
                        yield (lp, lm)
    else:
        raise ValueError(f"unknown admissible family {family!r}")


def g2(d: int) -> int:
    """Sum over d+ + d- = d of (sum_{i<=d+} s(i)) * (sum_{i<=d-} s(i))."""
    assert d >= 1
    s_prefix = [0] * (d + 2)
    acc = 0
    for i in range(d + 1):
        acc += distinct_partition_count(i)
        s_prefix[i] = acc
    return sum(s_prefix[dp] * s_prefix[d - dp] for dp in range(d + 1))


def _count_parts_at_most(n: int, cap: int) -> int:
    """Partitions of n with all parts <= cap (1 for n = 0)."""
    if n < 0:
        return 0
    table = [1] + [0] * n
    for k in range(1, min(cap, n) + 1):
        for m in range(k, n + 1):
            table[m] += table[m - k]
    return table[n]


def pi_count(n: int, p: int, e: int) -> int:
    """Partitions of n with all parts <= p^e and at least one part > p^{e-1}."""
    assert p >= 2 and e >= 1
    if n < 1:
        return 0
    return _count_parts_at_most(n, p**e) - _count_parts_at_most(n, p ** (e - 1))


def iter_pi_prime(n: int, p: int, e: int) -> Iterator[Partition]:
    """Members of pi'(n, p, e): parts <= p^e, some part > p^{e-1}, and every
    even part with even multiplicity."""
    assert p >= 2 and e >= 1
    if n < 1:
        return
    lo = p ** (e - 1)
    for parts in iter_all(n, p**e):
        if not parts or parts[0] <= lo:
            continue
        ok = True
        mult = {}
        for k in parts:
            if k % 2 == 0:
                mult[k] = mult.get(k, 0) + 1
        for k, m in mult.items():
            if m % 2 != 0:
                ok = False
                break
        if ok:
            yield parts


def pi_prime_count(n: int, p: int, e: int) -> int:
    """|pi'(n, p, e)| by direct enumeration (the weights in scope are small)."""
    return sum(1 for _ in iter_pi_prime(n, p, e))
