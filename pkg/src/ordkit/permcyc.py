"""Cycle-type algebra and multiset counting for direct powers.

A cycle type is the multiset of cycle lengths of a permutation, fixed
points included, so the degree is always the sum of the entries.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Tuple

__all__ = [
    "CycleType",
    "cycle_type_of",
    "gamma",
    "ord_of",
    "power",
    "is_even",
    "multiset_count",
    "omega_of_power",
]


@dataclass(frozen=True)
class CycleType:
    """Run-length encoded cycle lengths, sorted descending.

    runs: tuple of (length, multiplicity) with lengths strictly
    decreasing.  degree is stored explicitly so fixed points are never
    implicit.
    """

    runs: Tuple[Tuple[int, int], ...]
    degree: int

    @staticmethod
    def from_lengths(lengths: Iterable[int]) -> "CycleType":
        counts: dict[int, int] = {}
        for x in lengths:
            if x < 1:
                raise ValueError("cycle lengths must be >= 1")
            counts[x] = counts.get(x, 0) + 1
        runs = tuple(sorted(counts.items(), reverse=True))
        deg = sum(l * m for l, m in runs)
        return CycleType(runs, deg)

    def lengths(self) -> Tuple[int, ...]:
        out = []
        for l, m in self.runs:
            out.extend([l] * m)
        return tuple(out)

    def __post_init__(self):
        if self.degree != sum(l * m for l, m in self.runs):
            raise ValueError("degree does not match runs")
        if any(l < 1 or m < 1 for l, m in self.runs):
            raise ValueError("invalid run entry")
        if list(self.runs) != sorted(self.runs, reverse=True):
            raise ValueError("runs must be sorted descending")


def cycle_type_of(perm: Tuple[int, ...]) -> CycleType:
    """Cycle type of a permutation given in one-line notation on 0..n-1."""
    n = len(perm)
    seen = [False] * n
    lengths = []
    for i in range(n):
        if seen[i]:
            continue
        l = 0
        j = i
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            l += 1
        lengths.append(l)
    return CycleType.from_lengths(lengths)


def gamma(delta: CycleType) -> int:
    """Number of cycles, fixed points included."""
    return sum(m for _, m in delta.runs)


def ord_of(delta: CycleType) -> int:
    """Order of any permutation with this cycle type."""
    out = 1
    for l, _ in delta.runs:
        out = math.lcm(out, l)
    return out


def power(delta: CycleType, e: int) -> CycleType:
    """Cycle type of the e-th power.

    Each cycle of length l splits into gcd(l, e) cycles of length
    l // gcd(l, e).
    """
    if e < 1:
        raise ValueError("exponent must be >= 1")
    lengths = []
    for l, m in delta.runs:
        g = math.gcd(l, e)
        lengths.extend([l // g] * (g * m))
    return CycleType.from_lengths(lengths)


def is_even(delta: CycleType) -> bool:
    """Parity of the permutation: even iff sum of (l - 1) is even."""
    return sum((l - 1) * m for l, m in delta.runs) % 2 == 0


def multiset_count(n: int, k: int) -> int:
    """Number of multisets of size n from k symbols: C(n+k-1, k-1)."""
    if k < 1 or n < 0:
        raise ValueError("need k >= 1 and n >= 0")
    return math.comb(n + k - 1, k - 1)


def omega_of_power(omega_s: int, n: int) -> int:
    """Orbit count of the n-th direct power from the base orbit count."""
    if omega_s < 1 or n < 1:
        raise ValueError("need omega_s >= 1 and n >= 1")
    return math.comb(n + omega_s - 1, omega_s - 1)
