"""Exact integer kernel.

Factorization with an optional persistent cache, divisor machinery,
multiplicative orders, and the lcm/divisor calculus (Lambda sets,
gcd-reduced quotients, co-bounded divisor sets) that the torus and
bound computations are built on.
"""

from __future__ import annotations

import math
import os
import struct
from typing import Dict, Iterable, Iterator, Optional, Set

import sympy

__all__ = [
    "FactorCache",
    "default_cache",
    "factor",
    "factor_pm",
    "tau",
    "tau_of_factorization",
    "phi",
    "nu_p",
    "divisor_set",
    "divisors_of_factorization",
    "mult_order",
    "lambda_set",
    "sharp_div",
    "set_sharp_div",
    "co_bd",
    "psi",
    "log_of_nat",
    "loglog",
    "is_prime_power",
    "iter_prime_powers",
]

NEG_INF = float("-inf")

_MAGIC = b"ORDKIT-FC"
_VERSION = 1


class FactorCache:
    """Map from n to its prime factorization, optionally persisted to disk.

    File layout: magic bytes, u32 version, then one record per entry.
    Integers are big-endian with a u32 byte-length prefix; a record is n
    followed by u32 k and k (prime, u32 exponent) pairs.  All multi-byte
    scalars are big-endian.
    """

    def __init__(self, path: Optional[str] = None):
        self.path = path
        self._map: Dict[int, Dict[int, int]] = {}
        self.hits = 0
        self.misses = 0
        if path is not None and os.path.exists(path):
            self.load(path)

    def __len__(self) -> int:
        return len(self._map)

    def __contains__(self, n: int) -> bool:
        return n in self._map

    def get(self, n: int) -> Optional[Dict[int, int]]:
        fac = self._map.get(n)
        if fac is not None:
            self.hits += 1
        return fac

    def put(self, n: int, fac: Dict[int, int]) -> None:
        self._map[n] = dict(fac)

    def load(self, path: str) -> None:
        with open(path, "rb") as fh:
            blob = fh.read()
        if blob[: len(_MAGIC)] != _MAGIC:
            raise ValueError("not a factor cache file")
        (version,) = struct.unpack_from(">I", blob, len(_MAGIC))
        if version != _VERSION:
            raise ValueError(f"unsupported factor cache version {version}")
        pos = len(_MAGIC) + 4

        def read_nat() -> int:
            nonlocal pos
            (ln,) = struct.unpack_from(">I", blob, pos)
            pos += 4
            val = int.from_bytes(blob[pos : pos + ln], "big")
            pos += ln
            return val

        while pos < len(blob):
            n = read_nat()
            (k,) = struct.unpack_from(">I", blob, pos)
            pos += 4
            fac = {}
            for _ in range(k):
                p = read_nat()
                (e,) = struct.unpack_from(">I", blob, pos)
                pos += 4
                fac[p] = e
            self._map[n] = fac

    def save(self, path: Optional[str] = None) -> None:
        path = path or self.path
        assert path is not None, "no cache path configured"
        chunks = [_MAGIC, struct.pack(">I", _VERSION)]

        def nat_bytes(v: int) -> bytes:
            raw = v.to_bytes(max(1, (v.bit_length() + 7) // 8), "big")
            return struct.pack(">I", len(raw)) + raw

        for n in sorted(self._map):
            fac = self._map[n]
            chunks.append(nat_bytes(n))
            chunks.append(struct.pack(">I", len(fac)))
            for p in sorted(fac):
                chunks.append(nat_bytes(p))
                chunks.append(struct.pack(">I", fac[p]))
        tmp = f"{path}.tmp"
        with open(tmp, "wb") as fh:
            fh.write(b"".join(chunks))
        os.replace(tmp, path)


_default_cache: Optional[FactorCache] = None


def default_cache() -> FactorCache:
    """Process-wide cache; persists iff ORDKIT_CACHE names a file path."""
    global _default_cache
    if _default_cache is None:
        _default_cache = FactorCache(os.environ.get("ORDKIT_CACHE"))
    return _default_cache


def factor(n: int, cache: Optional[FactorCache] = None) -> Dict[int, int]:
    """Prime factorization of n >= 1 as {p: e}; 1 maps to {}."""
    if n < 1:
        raise ValueError("factor requires n >= 1")
    if n == 1:
        return {}
    c = cache if cache is not None else default_cache()
    fac = c.get(n)
    if fac is None:
        c.misses += 1
        fac = {int(p): int(e) for p, e in sympy.factorint(n).items()}
        assert math.prod(p**e for p, e in fac.items()) == n
        c.put(n, fac)
    return dict(fac)


def factor_pm(q: int, m: int, sign: int, cache: Optional[FactorCache] = None) -> Dict[int, int]:
    """Factorization of q^m - 1 (sign=-1) or q^m + 1 (sign=+1).

    Splits into cyclotomic values first so the rho stage only ever sees
    the (much smaller) factors Phi_d(q).
    """
    assert q >= 2 and m >= 1 and sign in (-1, 1)
    if sign == -1:
        ds = sympy.divisors(m)
    else:
        # q^m + 1 = (q^{2m}-1)/(q^m-1) = prod of Phi_d(q), d | 2m, d not | m
        ds = [d for d in sympy.divisors(2 * m) if m % d != 0]
    total: Dict[int, int] = {}
    for d in ds:
        val = int(sympy.cyclotomic_poly(d, q))
        for p, e in factor(val, cache).items():
            total[p] = total.get(p, 0) + e
    target = q**m - 1 if sign == -1 else q**m + 1
    assert math.prod(p**e for p, e in total.items()) == target
    return total


def tau_of_factorization(fac: Dict[int, int]) -> int:
    return math.prod(e + 1 for e in fac.values())


def tau(n: int, cache: Optional[FactorCache] = None) -> int:
    """Number of positive divisors of n."""
    return tau_of_factorization(factor(n, cache))


def phi(n: int, cache: Optional[FactorCache] = None) -> int:
    """Euler totient of n >= 1."""
    out = 1
    for p, e in factor(n, cache).items():
        out *= (p - 1) * p ** (e - 1)
    return out


def nu_p(p: int, n: int) -> int:
    """Exponent of the prime p in n >= 1."""
    assert n >= 1 and p >= 2
    e = 0
    while n % p == 0:
        n //= p
        e += 1
    return e


def divisors_of_factorization(fac: Dict[int, int]) -> Set[int]:
    divs = [1]
    for p, e in fac.items():
        divs = [d * p**i for d in divs for i in range(e + 1)]
    return set(divs)


def divisor_set(n: int, cache: Optional[FactorCache] = None) -> Set[int]:
    """Div(n): the set of positive divisors of n."""
    return divisors_of_factorization(factor(n, cache))


def mult_order(q: int, m: int) -> int:
    """Least t >= 1 with m | q^t - 1; requires gcd(q, m) = 1.

    This is deg_q(m), the degree over F_q of a root of unity of order m.
    """
    if m < 1:
        raise ValueError("modulus must be positive")
    if m == 1:
        return 1
    if math.gcd(q, m) != 1:
        raise ValueError(f"gcd({q},{m}) != 1, no multiplicative order")
    return int(sympy.n_order(q, m))


def lambda_set(families: Iterable[Iterable[int]]) -> Set[int]:
    """All lcms formed by choosing one member from every set of the family.

    The empty family gives {1}; any empty member forces the empty set.
    """
    acc = {1}
    for fam in families:
        fam = set(fam)
        if not fam:
            return set()
        acc = {math.lcm(a, b) for a in acc for b in fam}
    return acc


def sharp_div(m: int, k: int) -> int:
    """m // gcd(m, k): strips from m everything it shares with k."""
    assert m >= 1 and k >= 1
    return m // math.gcd(m, k)


def set_sharp_div(ms: Iterable[int], k: int) -> Set[int]:
    return {sharp_div(m, k) for m in ms}


def co_bd(f: int, h: float) -> Set[int]:
    """Divisors g of f whose cofactor f/g is at most h."""
    assert f >= 1 and h > 0
    return {g for g in divisor_set(f) if f <= h * g}


def psi(k: int) -> int:
    """lcm(1, ..., k); 1 for k <= 1."""
    assert k >= 0
    out = 1
    for i in range(2, k + 1):
        out = math.lcm(out, i)
    return out


def log_of_nat(n: int) -> float:
    """Natural log of a positive integer of any size; -inf for n <= 0."""
    if n <= 0:
        return NEG_INF
    bits = n.bit_length()
    if bits <= 960:
        return math.log(n)
    shift = bits - 64
    return math.log(n >> shift) + shift * math.log(2)


def loglog(x) -> float:
    """log log x where log maps nonpositive arguments to -inf."""
    if isinstance(x, int):
        inner = log_of_nat(x)
    else:
        inner = math.log(x) if x > 0 else NEG_INF
    if inner <= 0:
        return NEG_INF
    return math.log(inner)


def is_prime_power(n: int):
    """(p, k) with n = p^k for prime p, else None."""
    if n < 2:
        return None
    fac = sympy.factorint(n)
    if len(fac) != 1:
        return None
    ((p, k),) = fac.items()
    return int(p), int(k)


def iter_prime_powers(lo: int, hi: int) -> Iterator[int]:
    """Prime powers q with lo <= q <= hi, ascending."""
    for n in range(max(lo, 2), hi + 1):
        if is_prime_power(n) is not None:
            yield n
