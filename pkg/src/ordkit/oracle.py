"""Brute-force ground truth for small matrix and permutation groups.

Test support only. Groups are enumerated exhaustively (scan or breadth
first closure certified against the closed-form group order) and element
orders are read off minimal polynomials, so nothing here depends on the
torus or bound machinery it is used to check.

Conventions fixed for reproducibility: the unitary kinds use the
identity Gram matrix over GF(q^2) with conjugation x -> x^q; the
orthogonal kinds use diagonal symmetric forms diag(1,...,1,d) over odd
q, with d in {1, nonsquare} chosen to hit the requested type.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import List, Sequence, Set, Tuple

import numpy as np
from sympy import factorint

from .partitions import iter_all

__all__ = [
    "GUARD",
    "GF",
    "field",
    "FiniteFieldElem",
    "MatrixGroupSpec",
    "element_order_set",
    "perm_order_set",
]

GUARD = 10_000_000

# scans allocate q^(n^2) candidate matrices; cap that separately
_SCAN_GUARD = 20_000_000

_CLOSURE_SEED = 20260816


# ---------------------------------------------------------------------------
# polynomial helpers over the prime field, used only to build GF tables

def _pmul(a: Sequence[int], b: Sequence[int], p: int) -> List[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
    while len(out) > 1 and out[-1] == 0:
        out.pop()
    return out


def _pmod(a: Sequence[int], m: Sequence[int], p: int) -> List[int]:
    a = list(a)
    dm = len(m) - 1
    inv_lead = pow(m[-1], -1, p)
    while len(a) - 1 >= dm and any(a):
        if a[-1] == 0:
            a.pop()
            continue
        c = (a[-1] * inv_lead) % p
        shift = len(a) - 1 - dm
        for i, y in enumerate(m):
            a[shift + i] = (a[shift + i] - c * y) % p
        while len(a) > 1 and a[-1] == 0:
            a.pop()
    return a


def _ppowmod(x: Sequence[int], e: int, m: Sequence[int], p: int) -> List[int]:
    r = [1]
    b = _pmod(x, m, p)
    while e:
        if e & 1:
            r = _pmod(_pmul(r, b, p), m, p)
        b = _pmod(_pmul(b, b, p), m, p)
        e >>= 1
    return r


def _ptrim(a: Sequence[int]) -> List[int]:
    a = list(a)
    while len(a) > 1 and a[-1] == 0:
        a.pop()
    return a


def _pgcd(a: Sequence[int], b: Sequence[int], p: int) -> List[int]:
    a, b = _ptrim(a), _ptrim(b)
    while any(b):
        a, b = b, _ptrim(_pmod(a, b, p))
    return a


def _is_irreducible(f: Sequence[int], p: int) -> bool:
    k = len(f) - 1
    x = [0, 1]
    xq = _ppowmod(x, p ** k, f, p)
    # x^(p^k) == x mod f
    diff = [(xq[i] if i < len(xq) else 0) - (x[i] if i < len(x) else 0) for i in range(max(len(xq), 2))]
    if any(c % p for c in diff):
        return False
    for r in {r for r in factorint(k)}:
        xr = _ppowmod(x, p ** (k // r), f, p)
        d = [(xr[i] if i < len(xr) else 0) - (x[i] if i < len(x) else 0) for i in range(max(len(xr), 2))]
        d = [c % p for c in d]
        if not any(d):
            return False
        g = _pgcd(f, d, p)
        if len(g) > 1:
            return False
    return True


def _find_irreducible(p: int, k: int) -> Tuple[int, ...]:
    if k == 1:
        return (0, 1)
    for c in range(p ** k):
        low = []
        t = c
        for _ in range(k):
            low.append(t % p)
            t //= p
        f = low + [1]
        if _is_irreducible(f, p):
            return tuple(f)
    raise AssertionError("no irreducible polynomial found")


# ---------------------------------------------------------------------------
# the field itself: elements are ints 0..q-1 encoding coordinates base p

class GF:
    """GF(q) with dense lookup tables; q = p^k <= 81."""

    def __init__(self, q: int):
        fac = factorint(q)
        if len(fac) != 1:
            raise ValueError(f"{q} is not a prime power")
        (p, k), = fac.items()
        if q > 81:
            raise ValueError("fields beyond GF(81) are not supported")
        self.q, self.p, self.k = q, p, k
        self.modpoly = _find_irreducible(p, k)

        digits = np.zeros((q, k), dtype=np.uint8)
        t = np.arange(q)
        for i in range(k):
            digits[:, i] = t % p
            t = t // p
        self._digits = digits
        self._weights = p ** np.arange(k)

        self.ADD = self._pack((digits[:, None, :].astype(int) + digits[None, :, :]) % p)
        self.NEG = self._pack((-digits.astype(int)) % p)

        # exp/log over a verified multiplicative generator
        chain = self._generator_chain()
        self.EXP = np.array(chain, dtype=np.uint8)
        self.LOG = np.full(q, -1, dtype=np.int64)
        for i, v in enumerate(chain):
            self.LOG[v] = i
        nz = np.add.outer(self.LOG[1:], self.LOG[1:]) % (q - 1)
        MUL = np.zeros((q, q), dtype=np.uint8)
        MUL[1:, 1:] = self.EXP[nz]
        self.MUL = MUL
        INV = np.zeros(q, dtype=np.uint8)
        INV[1:] = self.EXP[(-self.LOG[1:]) % (q - 1)]
        self.INV = INV
        if k % 2 == 0:
            e = p ** (k // 2)
            CONJ = np.zeros(q, dtype=np.uint8)
            CONJ[1:] = self.EXP[(self.LOG[1:] * e) % (q - 1)]
            self.CONJ = CONJ
        else:
            self.CONJ = None
        square = np.zeros(q, dtype=bool)
        square[0] = True
        square[self.EXP[::2]] = True
        self.SQUARE = square
        self.nonsquare = int(self.EXP[1]) if q % 2 else None

    def _pack(self, dig: np.ndarray) -> np.ndarray:
        return (dig.astype(np.int64) @ self._weights).astype(np.uint8)

    def _mul_scalar(self, a: int, b: int) -> int:
        pa = [int(c) for c in self._digits[a]]
        pb = [int(c) for c in self._digits[b]]
        r = _pmod(_pmul(pa, pb, self.p), list(self.modpoly), self.p)
        r = r + [0] * (self.k - len(r))
        return int(sum(int(c) * self.p ** i for i, c in enumerate(r)))

    def _generator_chain(self) -> List[int]:
        q = self.q
        if q == 2:
            return [1]
        for g in range(2, q):
            chain = [1]
            cur = g
            while cur != 1 and len(chain) < q:
                chain.append(cur)
                cur = self._mul_scalar(cur, g)
            if cur == 1 and len(chain) == q - 1:
                return chain
        raise AssertionError("no generator found")

    # scalar or ndarray
    def add(self, a, b):
        return self.ADD[a, b]

    def sub(self, a, b):
        return self.ADD[a, self.NEG[b]]

    def mul(self, a, b):
        return self.MUL[a, b]

    def inv(self, a):
        return self.INV[a]

    def conj(self, a):
        if self.CONJ is None:
            raise ValueError("conjugation needs a square field")
        return self.CONJ[a]

    def pow_elem(self, x: int, e: int) -> int:
        if x == 0:
            return 0 if e else 1
        return int(self.EXP[(int(self.LOG[x]) * e) % (self.q - 1)])

    def is_square(self, x: int) -> bool:
        return bool(self.SQUARE[x])

    def elem(self, value: int) -> "FiniteFieldElem":
        if not 0 <= value < self.q:
            raise ValueError("value out of range")
        return FiniteFieldElem(self.p, self.k, tuple(int(c) for c in self._digits[value]))


@lru_cache(maxsize=None)
def field(q: int) -> GF:
    return GF(q)


@dataclass(frozen=True)
class FiniteFieldElem:
    """One element of GF(p^k), kept as coordinates over the prime field."""

    p: int
    k: int
    coords: Tuple[int, ...]

    def __post_init__(self):
        if len(self.coords) != self.k or any(not 0 <= c < self.p for c in self.coords):
            raise ValueError("bad coordinates")
        if self.p ** self.k > 81:
            raise ValueError("q = p^k must be <= 81")

    @property
    def value(self) -> int:
        return sum(c * self.p ** i for i, c in enumerate(self.coords))

    def _gf(self) -> GF:
        return field(self.p ** self.k)

    def _wrap(self, v: int) -> "FiniteFieldElem":
        return self._gf().elem(int(v))

    def __add__(self, other: "FiniteFieldElem") -> "FiniteFieldElem":
        return self._wrap(self._gf().add(self.value, other.value))

    def __neg__(self) -> "FiniteFieldElem":
        return self._wrap(self._gf().NEG[self.value])

    def __sub__(self, other: "FiniteFieldElem") -> "FiniteFieldElem":
        return self + (-other)

    def __mul__(self, other: "FiniteFieldElem") -> "FiniteFieldElem":
        return self._wrap(self._gf().mul(self.value, other.value))

    def inverse(self) -> "FiniteFieldElem":
        if self.value == 0:
            raise ZeroDivisionError
        return self._wrap(self._gf().inv(self.value))


# ---------------------------------------------------------------------------
# batched matrix arithmetic through the tables

def _mat_mul(gf: GF, A: np.ndarray, B: np.ndarray) -> np.ndarray:
    P = gf.MUL[A[..., :, :, None], B[..., None, :, :]]
    C = P[..., 0, :]
    for t in range(1, P.shape[-2]):
        C = gf.ADD[C, P[..., t, :]]
    return C


def _det(gf: GF, M: np.ndarray) -> np.ndarray:
    n = M.shape[-1]
    if n == 1:
        return M[..., 0, 0]
    if n == 2:
        return gf.sub(gf.mul(M[..., 0, 0], M[..., 1, 1]), gf.mul(M[..., 0, 1], M[..., 1, 0]))
    acc = None
    for j in range(n):
        idx = [c for c in range(n) if c != j]
        term = gf.mul(M[..., 0, j], _det(gf, M[..., 1:, :][..., :, idx]))
        if acc is None:
            acc = term
        elif j % 2:
            acc = gf.sub(acc, term)
        else:
            acc = gf.add(acc, term)
    return acc


def _scan_matrices(gf: GF, n: int, det_one: bool) -> np.ndarray:
    q = gf.q
    N = q ** (n * n)
    if N > _SCAN_GUARD:
        raise ValueError(f"scan of {N} candidate matrices exceeds the guard")
    M = np.empty((N, n * n), dtype=np.uint8)
    t = np.arange(N, dtype=np.int64)
    for i in range(n * n):
        M[:, i] = (t % q).astype(np.uint8)
        t = t // q
    M = M.reshape(N, n, n)
    d = _det(gf, M)
    mask = (d == 1) if det_one else (d != 0)
    return M[mask]


# ---------------------------------------------------------------------------
# isometry groups: certified closure from random Gram-walk completions

def _all_vectors(gf: GF, n: int) -> np.ndarray:
    V = gf.q ** n
    out = np.empty((V, n), dtype=np.uint8)
    t = np.arange(V, dtype=np.int64)
    for i in range(n):
        out[:, i] = (t % gf.q).astype(np.uint8)
        t = t // gf.q
    return out


def _bform(gf: GF, u: np.ndarray, vecs: np.ndarray, J: Sequence[int], unitary: bool):
    # B(u, v) = sum conj(u_j) J_j v_j, u fixed, v running over rows of vecs
    acc = None
    for j, Jj in enumerate(J):
        lhs = gf.conj(u[j]) if unitary else u[j]
        t = gf.mul(gf.mul(lhs, Jj), vecs[:, j])
        acc = t if acc is None else gf.add(acc, t)
    return acc


def _norms(gf: GF, vecs: np.ndarray, J: Sequence[int], unitary: bool):
    acc = None
    for j, Jj in enumerate(J):
        lhs = gf.conj(vecs[:, j]) if unitary else vecs[:, j]
        t = gf.mul(gf.mul(lhs, Jj), vecs[:, j])
        acc = t if acc is None else gf.add(acc, t)
    return acc


def _random_isometry(gf: GF, J: Sequence[int], unitary: bool, rng) -> np.ndarray:
    n = len(J)
    vecs = _all_vectors(gf, n)
    norms = _norms(gf, vecs, J, unitary)
    cols: List[np.ndarray] = []
    for i in range(n):
        mask = norms == J[i]
        for c in cols:
            mask &= _bform(gf, c, vecs, J, unitary) == 0
        idx = np.flatnonzero(mask)
        assert len(idx), "Gram walk dead end; the form data is inconsistent"
        cols.append(vecs[rng.choice(idx)])
    return np.stack(cols, axis=1)


def _bfs_closure(gf: GF, gens: List[np.ndarray], n: int, expected: int) -> np.ndarray:
    w = (gf.q ** np.arange(n * n)).astype(np.int64)

    def pack(ms: np.ndarray) -> np.ndarray:
        return ms.reshape(len(ms), -1).astype(np.int64) @ w

    eye = np.eye(n, dtype=np.uint8)[None]
    elems = [eye]
    seen = pack(eye)
    frontier = eye
    total = 1
    while len(frontier):
        cand = np.concatenate(
            [_mat_mul(gf, frontier, np.broadcast_to(g, frontier.shape)) for g in gens]
        )
        keys = pack(cand)
        keys, first = np.unique(keys, return_index=True)
        cand = cand[first]
        pos = np.clip(np.searchsorted(seen, keys), 0, len(seen) - 1)
        fresh = seen[pos] != keys
        if not fresh.any():
            break
        cand = cand[fresh]
        seen = np.sort(np.concatenate([seen, keys[fresh]]))
        elems.append(cand)
        frontier = cand
        total += len(cand)
        assert total <= expected, "closure escaped the target group"
    return np.concatenate(elems)


def _isometry_group(gf: GF, J: Sequence[int], unitary: bool, expected: int) -> np.ndarray:
    n = len(J)
    if n == 1:
        vecs = np.arange(gf.q, dtype=np.uint8)
        lhs = gf.conj(vecs) if unitary else vecs
        mask = gf.mul(gf.mul(lhs, J[0]), vecs) == J[0]
        return vecs[mask].reshape(-1, 1, 1)
    rng = np.random.default_rng(_CLOSURE_SEED)
    gens = [_random_isometry(gf, J, unitary, rng) for _ in range(2)]
    for _ in range(24):
        elems = _bfs_closure(gf, gens, n, expected)
        if len(elems) == expected:
            return elems
        gens.append(_random_isometry(gf, J, unitary, rng))
    raise AssertionError("closure kept landing in a proper subgroup")


def _go_form(gf: GF, n: int, eps: int) -> List[int]:
    # diag(1,...,1,d): type is + exactly when (-1)^(n/2) * disc is a square
    m = n // 2
    sign = 1 if m % 2 == 0 else int(gf.NEG[1])
    for d in (1, gf.nonsquare):
        if gf.is_square(int(gf.mul(sign, d))) == (eps == 1):
            return [1] * (n - 1) + [int(d)]
    raise AssertionError("no discriminant hits the requested type")


# ---------------------------------------------------------------------------
# group specs

_KINDS = ("GL", "SL", "PSL", "GU", "SU", "PSU", "GOodd", "GOeven+", "GOeven-")


def _gl_order(n: int, q: int) -> int:
    return math.prod(q ** n - q ** i for i in range(n))


def _gu_order(n: int, q: int) -> int:
    return q ** (n * (n - 1) // 2) * math.prod(q ** i - (-1) ** i for i in range(1, n + 1))


def _go_order(n: int, q: int, eps: int) -> int:
    m = n // 2
    if n % 2:
        return 2 * q ** (m * m) * math.prod(q ** (2 * i) - 1 for i in range(1, m + 1))
    return 2 * q ** (m * (m - 1)) * (q ** m - eps) * math.prod(
        q ** (2 * i) - 1 for i in range(1, m)
    )


@dataclass(frozen=True)
class MatrixGroupSpec:
    """What to enumerate: kind in {GL, SL, PSL, GU, SU, PSU, GOodd, GOeven+/-}."""

    kind: str
    n: int
    q: int

    def __post_init__(self):
        if self.kind not in _KINDS:
            raise ValueError(f"unknown kind {self.kind!r}")
        fac = factorint(self.q)
        if self.q < 2 or len(fac) != 1:
            raise ValueError("q must be a prime power")
        nmax = 4 if self.kind in ("GL", "SL") and self.q <= 3 else 3
        if not 1 <= self.n <= nmax:
            raise ValueError(f"n out of range for {self.kind} over q={self.q}")
        if self.kind == "GOodd" and self.n % 2 == 0:
            raise ValueError("GOodd needs odd dimension")
        if self.kind.startswith("GOeven") and (self.n % 2 or self.n < 2):
            raise ValueError("GOeven needs even dimension >= 2")
        if self.kind.startswith("GO") and self.q % 2 == 0:
            raise ValueError("orthogonal oracle needs odd q")
        field(self.field_size())  # raises beyond GF(81)

    @property
    def char(self) -> int:
        (p, _), = factorint(self.q).items()
        return p

    def field_size(self) -> int:
        return self.q ** 2 if self.kind in ("GU", "SU", "PSU") else self.q

    def group_order(self) -> int:
        n, q = self.n, self.q
        if self.kind in ("GL", "SL", "PSL"):
            o = _gl_order(n, q)
            if self.kind != "GL":
                o //= q - 1
            if self.kind == "PSL":
                o //= math.gcd(n, q - 1)
            return o
        if self.kind in ("GU", "SU", "PSU"):
            o = _gu_order(n, q)
            if self.kind != "GU":
                o //= q + 1
            if self.kind == "PSU":
                o //= math.gcd(n, q + 1)
            return o
        eps = 1 if self.kind != "GOeven-" else -1
        return _go_order(n, q, eps)


# ---------------------------------------------------------------------------
# element orders via minimal polynomials

def _order_mod_poly(gf: GF, coeffs: Sequence[int], projective: bool) -> int:
    # order of X in GF(q)[X]/(m), m monic with the given low coefficients;
    # projective counts steps to the first scalar instead of to 1
    d = len(coeffs)
    neg = [int(gf.NEG[c]) for c in coeffs]
    if d == 1:
        P = [neg[0]]
    else:
        P = [0, 1] + [0] * (d - 2)
    cap = 8 * gf.q ** d + 16
    k = 1
    while True:
        if projective:
            done = all(c == 0 for c in P[1:])
        else:
            done = P[0] == 1 and all(c == 0 for c in P[1:])
        if done:
            return k
        top = P[d - 1] if d > 1 else 0
        if d == 1:
            P = [int(gf.mul(P[0], neg[0]))]
        else:
            Q = [0] * d
            for i in range(d):
                lo = P[i - 1] if i else 0
                Q[i] = int(gf.add(lo, gf.mul(top, neg[i])))
            P = Q
        k += 1
        assert k <= cap, "order search ran away; the polynomial is not a unit"


def _pack_keys(q: int, deg, c2, c1, c0) -> np.ndarray:
    out = deg.astype(np.int64)
    for part in (c2, c1, c0):
        out = out * q + part.astype(np.int64)
    return out


def _minpoly_keys(gf: GF, M: np.ndarray) -> np.ndarray:
    n = M.shape[-1]
    q = gf.q
    N = len(M)
    zero = np.zeros(N, dtype=np.uint8)
    if n == 1:
        return _pack_keys(q, np.ones(N, np.uint8), zero, zero, gf.NEG[M[:, 0, 0]])
    if n == 2:
        d0, d1 = M[:, 0, 0], M[:, 1, 1]
        scalar = (M[:, 0, 1] == 0) & (M[:, 1, 0] == 0) & (d0 == d1)
        k1 = _pack_keys(q, np.full(N, 1, np.uint8), zero, zero, gf.NEG[d0])
        k2 = _pack_keys(q, np.full(N, 2, np.uint8), zero, gf.NEG[gf.add(d0, d1)], _det(gf, M))
        return np.where(scalar, k1, k2)

    M2 = _mat_mul(gf, M, M)
    d0, d1, d2 = M[:, 0, 0], M[:, 1, 1], M[:, 2, 2]
    pos = [(0, 1), (0, 2), (1, 0), (1, 2), (2, 0), (2, 1)]
    OD = np.stack([M[:, i, j] for i, j in pos], axis=1)
    OD2 = np.stack([M2[:, i, j] for i, j in pos], axis=1)
    od_zero = (OD == 0).all(axis=1)
    scalar = od_zero & (d0 == d1) & (d1 == d2)

    # degree-2 candidate X^2 = aX + b: a from an off-diagonal witness, or
    # from two distinct diagonal entries when the matrix is diagonal
    r = np.arange(N)
    wit = np.argmax(OD != 0, axis=1)
    a_od = gf.mul(OD2[r, wit], gf.INV[OD[r, wit]])
    D = np.stack([d0, d1, d2], axis=1)
    S = np.stack([M2[:, 0, 0], M2[:, 1, 1], M2[:, 2, 2]], axis=1)
    i1 = np.where(d0 != d1, 0, np.where(d0 != d2, 0, 1))
    i2 = np.where(d0 != d1, 1, np.where(d0 != d2, 2, 2))
    a_dg = gf.mul(gf.sub(S[r, i1], S[r, i2]), gf.INV[gf.sub(D[r, i1], D[r, i2])])
    a = np.where(~od_zero, a_od, a_dg).astype(np.uint8)
    b = gf.sub(M2[:, 0, 0], gf.mul(a, d0))
    T = gf.mul(a[:, None, None], M)
    di = np.arange(3)
    T[:, di, di] = gf.add(T[:, di, di], b[:, None])
    quad = (M2 == T).all(axis=(1, 2)) & ~scalar

    tr = gf.add(gf.add(d0, d1), d2)
    m01 = gf.sub(gf.mul(d0, d1), gf.mul(M[:, 0, 1], M[:, 1, 0]))
    m02 = gf.sub(gf.mul(d0, d2), gf.mul(M[:, 0, 2], M[:, 2, 0]))
    m12 = gf.sub(gf.mul(d1, d2), gf.mul(M[:, 1, 2], M[:, 2, 1]))
    c1 = gf.add(gf.add(m01, m02), m12)

    k1 = _pack_keys(q, np.full(N, 1, np.uint8), zero, zero, gf.NEG[d0])
    k2 = _pack_keys(q, np.full(N, 2, np.uint8), zero, gf.NEG[a], gf.NEG[b])
    k3 = _pack_keys(q, np.full(N, 3, np.uint8), gf.NEG[tr], c1, gf.NEG[_det(gf, M)])
    return np.where(scalar, k1, np.where(quad, k2, k3))


def _orders_by_minpoly(gf: GF, M: np.ndarray, projective: bool) -> Set[int]:
    q = gf.q
    out: Set[int] = set()
    for key in np.unique(_minpoly_keys(gf, M)):
        key = int(key)
        c0 = key % q
        c1 = (key // q) % q
        c2 = (key // q ** 2) % q
        deg = key // q ** 3
        coeffs = [c0, c1, c2][:deg]
        out.add(_order_mod_poly(gf, coeffs, projective))
    return out


def _is_scalar_mask(M: np.ndarray) -> np.ndarray:
    n = M.shape[-1]
    mask = np.ones(len(M), dtype=bool)
    for i in range(n):
        for j in range(n):
            if i != j:
                mask &= M[:, i, j] == 0
            elif i:
                mask &= M[:, i, i] == M[:, 0, 0]
    return mask


def _orders_sequential(gf: GF, M: np.ndarray, projective: bool) -> Set[int]:
    n = M.shape[-1]
    eye = np.eye(n, dtype=np.uint8)
    P = M.copy()
    alive = np.ones(len(M), dtype=bool)
    out: Set[int] = set()
    k = 1
    while alive.any():
        done = _is_scalar_mask(P) if projective else (P == eye).all(axis=(1, 2))
        if (alive & done).any():
            out.add(k)
        alive &= ~done
        if alive.any():
            P[alive] = _mat_mul(gf, P[alive], M[alive])
        k += 1
        assert k <= 10_000
    return out


def _elements(spec: MatrixGroupSpec, gf: GF) -> np.ndarray:
    kind = spec.kind
    if kind in ("GL", "SL", "PSL"):
        return _scan_matrices(gf, spec.n, det_one=kind != "GL")
    if kind in ("GU", "SU", "PSU"):
        full = MatrixGroupSpec("GU", spec.n, spec.q).group_order()
        elems = _isometry_group(gf, [1] * spec.n, True, full)
        if kind != "GU":
            elems = elems[_det(gf, elems) == 1]
            assert len(elems) == full // (spec.q + 1)
        return elems
    eps = -1 if kind == "GOeven-" else 1
    J = _go_form(gf, spec.n, eps) if spec.n % 2 == 0 else [1] * spec.n
    return _isometry_group(gf, J, False, spec.group_order())


def element_order_set(spec: MatrixGroupSpec, semisimple: bool = False) -> Set[int]:
    """Exact element-order set; PSL/PSU orders are taken in the quotient.

    semisimple=True keeps only the orders coprime to the characteristic,
    which is exactly the set of semisimple element orders.
    """
    if spec.group_order() > GUARD:
        raise ValueError(
            f"group order {spec.group_order()} exceeds the enumeration guard {GUARD}"
        )
    gf = field(spec.field_size())
    mats = _elements(spec, gf)
    projective = spec.kind in ("PSL", "PSU")
    if spec.n <= 3:
        orders = _orders_by_minpoly(gf, mats, projective)
    else:
        orders = _orders_sequential(gf, mats, projective)
    if semisimple:
        p = spec.char
        orders = {o for o in orders if o % p}
    return orders


def perm_order_set(kind: str, n: int) -> Set[int]:
    """Element orders of Sym(n) or Alt(n) by cycle-type enumeration, n <= 12."""
    if kind not in ("Sym", "Alt"):
        raise ValueError(f"unknown kind {kind!r}")
    if not 1 <= n <= 12:
        raise ValueError("n must be between 1 and 12")
    out: Set[int] = set()
    for lam in iter_all(n):
        if kind == "Alt" and (n - len(lam)) % 2:
            continue
        out.add(math.lcm(*lam))
    return out
