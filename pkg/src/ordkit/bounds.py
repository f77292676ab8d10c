"""Orbit-count lower bounds, order-count upper bounds, and threshold scans.

The module collects the quantitative side of the toolkit: epsilon
invariants, the crude and refined bounds on omega(S) and o(S) for groups
of Lie type, the parameter scans that isolate the finite exception lists,
and the explicit growth function f1.

All epsilon comparisons run in binary64 with a 1e-9 guard band; every
scan keeps its per-row margins so borderline cells can be audited.
Computed sets occasionally differ from the embedded reference columns;
each such cell is recorded in INTERPRETATION_DIFFS rather than patched.
"""

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, FrozenSet, Iterable, List, NamedTuple, Optional, Tuple

import mpmath

from . import liecat, numkit, partitions, tori
from .liecat import LieGroupId
from .numkit import NEG_INF, loglog

__all__ = [
    "EPS_GUARD",
    "EPS_OMEGA_ALT5",
    "EPS_Q_MONSTER",
    "C_MONSTER",
    "eps_omega",
    "eps_q",
    "InvariantProfile",
    "invariant_profile",
    "unipotent_order_count",
    "o_upper",
    "obar_refined",
    "obar_refined_parts",
    "class_number_lower",
    "omega_lower",
    "BoundReport",
    "bound_report",
    "psl2_eps_q_lower",
    "eps_q_lower_classical",
    "Q0Row",
    "scan_q0",
    "eps_q_rough",
    "ExceptionalRow",
    "scan_exceptional_rows",
    "scan_exceptional",
    "SmallRankRow",
    "SmallRankScan",
    "scan_small_rank_rows",
    "scan_small_rank",
    "f1",
    "InterpretationDiff",
    "INTERPRETATION_DIFFS",
    "REFERENCE_Q0",
    "REFERENCE_EXCEPTIONAL_REMAINING",
    "REFERENCE_SMALL_RANK",
    "REFERENCE_ONLY_OMICRON",
    "REFERENCE_REMAINING",
    "REFERENCE_SINGLE_GROUP",
]

EPS_GUARD = 1e-9

# eps_omega(Alt(5)) = loglog 4 / loglog 60 and eps_q(M) = loglog(413/73) /
# loglog |M| are the two thresholds every scan compares against.
EPS_OMEGA_ALT5 = loglog(4) / loglog(60)
EPS_Q_MONSTER = loglog(Fraction(413, 73)) / loglog(liecat.monster_order())
C_MONSTER = 1.0 / EPS_Q_MONSTER


def eps_omega(omega: int, order: int) -> float:
    """loglog(omega) / loglog(order); -inf propagates for omega <= 1.

    Meaningful for order >= 3 (the denominator is positive there).
    """
    return loglog(omega) / loglog(order)


def eps_q(qval, order: int) -> float:
    """loglog(qval + 3) / loglog(order) for rational or real qval."""
    return loglog(qval + 3) / loglog(order)


@dataclass(frozen=True)
class InvariantProfile:
    omega: int
    o: int
    d: int
    q: Fraction
    lam: float


def invariant_profile(omega: int, o: int) -> InvariantProfile:
    """Derived invariants of a pair (omega, o): difference, quotient, exponent.

    lam solves omega = o**lam; the trivial pair (1, 1) gets lam = 1.
    omega < o is rejected.
    """
    if o < 1:
        raise ValueError("o must be at least 1")
    if omega < o:
        raise ValueError("omega < o is impossible for a group")
    if o == 1:
        lam = 1.0 if omega == 1 else math.inf
    else:
        lam = numkit.log_of_nat(omega) / numkit.log_of_nat(o)
    return InvariantProfile(omega, o, omega - o, Fraction(omega, o), lam)


# ---------------------------------------------------------------------------
# order-count upper bounds


def unipotent_order_count(S: LieGroupId) -> int:
    """1 + ceil(log_p h): the number of element orders that are powers of p."""
    h = S.coxeter
    p = S.p
    e = 0
    while p ** e < h:
        e += 1
    return 1 + e


def o_upper(S: LieGroupId) -> int:
    """Coarse bound o(S) <= o_ss(S) * (1 + ceil(log_p h)) for classical S.

    Type A rank 1 is exact rather than a product: the only non-semisimple
    order is p itself, so the bound is o_ss + 1.
    """
    tori.classical_key(S)
    count, _ = tori.oss_simple(S)
    if S.family == "A" and S.twist == 1 and S.d == 1:
        return count + 1
    return count * unipotent_order_count(S)


def _union_of_divisor_lcms(base: Iterable[int], m: int) -> int:
    seen = set()
    for o in base:
        seen.update(numkit.divisor_set(math.lcm(m, o)))
    return len(seen)


def obar_refined_parts(S: LieGroupId) -> Tuple[Tuple[str, int], ...]:
    """Per-layer breakdown of the refined o(S) bound.

    Layer e0 counts semisimple orders exactly; layer e >= 1 counts orders of
    elements whose p-part is exactly p^e, bounded through the centralizer of
    a p^(e-1)+1 type regular unipotent block.  Defined for linear and
    unitary groups at every q and for the two orthogonal D families at odd q.
    """
    key = tori.classical_key(S)
    if key in ("B", "C"):
        raise ValueError("refined bound is defined for types A, 2A, D, 2D")
    q, p, d = S.q, S.p, S.d
    if key in ("D", "2D") and p == 2:
        raise ValueError("orthogonal refinement needs odd characteristic")
    h = S.coxeter
    emax = 0
    while p ** emax < h:
        emax += 1
    parts: List[Tuple[str, int]] = [("e0", tori.oss_simple(S)[0])]
    for e in range(1, emax + 1):
        pe1 = p ** (e - 1)
        if key in ("A", "2A"):
            eps = 1 if key == "A" else -1
            if pe1 + 1 == d + 1:
                val = 1
            elif pe1 + 1 == d:
                val = numkit.tau((q - eps) // math.gcd(d + 1, q - eps))
            else:
                kind = "GL" if key == "A" else "GU"
                val = _union_of_divisor_lcms(tori.ord_ss(kind, d - pe1, q), q - eps)
        else:
            if pe1 + 1 == 2 * d - 2:
                val = 1
            else:
                u1 = set()
                for o in tori.ord_ss("GOodd", 2 * d - pe1 - 2, q):
                    u1.update(numkit.divisor_set(math.lcm(2, o)))
                kind = "GOplus" if key == "D" else "GOminus"
                for o in tori.ord_ss(kind, 2 * d - 2 * (pe1 + 1), q):
                    u1.update(numkit.divisor_set(math.lcm(q + 1, o)))
                val = len(u1)
        parts.append((f"e{e}", val))
    return tuple(parts)


def obar_refined(S: LieGroupId) -> int:
    """Refined upper bound on o(S): the sum over p-part layers."""
    return sum(v for _, v in obar_refined_parts(S))


# ---------------------------------------------------------------------------
# class-number lower bounds and omega lower bounds


def _small_family_key(S: LieGroupId) -> Optional[str]:
    if S.family == "A" and S.d == 1 and S.twist == 1:
        return "A1"
    if S.family == "A" and S.d == 2:
        return "A2" if S.twist == 1 else "2A2"
    if S.family in ("B", "C") and S.d == 2 and S.twist == 1:
        return "B2"
    if S.family == "G2" and S.twist == 1:
        return "G2"
    if S.family == "B" and S.d == 2 and S.twist == 2:
        return "2B2"
    if S.family == "G2" and S.twist == 2:
        return "2G2"
    return None


def _small_family_kappa(key: str, S: LieGroupId) -> int:
    if key == "A1":
        q = S.q
        return q + 1 if q % 2 == 0 else (q + 5) // 2
    if key == "A2":
        q = S.q
        return (q * q + q + 10) // 3 if q % 3 == 1 else q * q + q
    if key == "2A2":
        q = S.q
        return (q * q + q + 12) // 3 if q % 3 == 2 else q * q + q + 2
    if key == "B2":
        q = S.q
        return q * q + 2 * q + 3 if q % 2 == 0 else (q * q + 6 * q + 13) // 2
    if key == "G2":
        q = S.q
        return q * q + 2 * q + 9 if q % 6 in (1, 5) else q * q + 2 * q + 8
    if key == "2B2":
        return S.q2 + 3
    if key == "2G2":
        return S.q2 + 8
    raise ValueError(key)


# Exceptional-family class-number lower bounds: (power of q, divisor).
_EXC_KAPPA = {
    ("F4", 1): (4, 1),
    ("F4", 2): (4, 1),  # in the q^2 = 2^(2k+1) parameter
    ("D", 3): (4, 1),
    ("E6", 1): (6, 3),
    ("E6", 2): (6, 3),
    ("E7", 1): (7, 2),
    ("E8", 1): (8, 1),
}


def _class_number_lower_tagged(S: LieGroupId) -> Tuple[int, str]:
    key = _small_family_key(S)
    if key is not None:
        return _small_family_kappa(key, S), "kappa:smallRankTable"
    exc = _EXC_KAPPA.get((S.family, S.twist))
    if exc is not None:
        k, div = exc
        qk = S.q2 ** (k // 2) if S.is_suzuki_ree else S.q ** k
        return -(-qk // div), "kappa:exceptionalLower"
    q = S.q
    return -(-(q ** S.d) // min(S.d + 1, q + 1)), "kappa:generic"


def class_number_lower(S: LieGroupId) -> int:
    """Best available lower bound on the conjugacy class number of S.

    Exact for the seven rank <= 2 families; the printed per-family lower
    bound for the remaining exceptional types; the generic
    ceil(q^d / min(d+1, q+1)) otherwise.
    """
    return _class_number_lower_tagged(S)[0]


def omega_lower(S: LieGroupId, refined: bool = False) -> int:
    """ceil(kappa / |Out|), from omega(S) >= kappa(S) / |Out(S)|.

    With refined=True the trivial class is split off first:
    1 + ceil((kappa - 1) / |Out|), which is sharper whenever |Out| > 1.
    """
    kappa = class_number_lower(S)
    out = liecat.out_order(S)
    if refined:
        return 1 + -(-(kappa - 1) // out)
    return -(-kappa // out)


@dataclass(frozen=True)
class BoundReport:
    group: LieGroupId
    omega_lower: int
    o_upper: int
    eps_omega_lower: float
    eps_q_lower: float
    formula_tags: Tuple[str, ...]


def _torus_class_o_bound(S: LieGroupId) -> int:
    """o(S) <= 2 * ktor * (1 + ceil(log2 h)) * (q+1)^(d/2), exceptional types."""
    ktor = liecat.ktor_constant(S.family, S.twist)
    h = S.coxeter
    qreal = math.sqrt(S.q2) if S.is_suzuki_ree else float(S.q)
    val = 2 * ktor * (1 + math.ceil(math.log2(h))) * (qreal + 1) ** (S.d / 2)
    return math.ceil(val)


def bound_report(S: LieGroupId, refined: bool = False) -> BoundReport:
    """Assemble the omega/o/epsilon bounds for one simple group."""
    tags: List[str] = []
    kappa, ktag = _class_number_lower_tagged(S)
    tags.append(ktag)
    tags.append("out:exact")
    w_low = omega_lower(S, refined=refined)
    tags.append("omega:refined+1" if refined else "omega:ceil")
    try:
        key = tori.classical_key(S)
    except ValueError:
        key = None
    if key is None:
        o_up = _torus_class_o_bound(S)
        tags.append("o:torusClassCount")
    elif refined and key in ("A", "2A", "D", "2D") and not (key in ("D", "2D") and S.p == 2):
        o_up = obar_refined(S)
        tags.append("o:layeredRefined")
    else:
        o_up = o_upper(S)
        tags.append("o:ossTimesUnipotent")
    order = liecat.order_of(S)
    return BoundReport(
        group=S,
        omega_lower=w_low,
        o_upper=o_up,
        eps_omega_lower=eps_omega(w_low, order),
        eps_q_lower=eps_q(Fraction(w_low, o_up), order),
        formula_tags=tuple(tags),
    )


# ---------------------------------------------------------------------------
# classical epsilon_q ladder


def psl2_eps_q_lower(q: int) -> float:
    """Lower bound on eps_q(PSL_2(q)) for prime powers q >= 7."""
    if q < 7 or not numkit.is_prime_power(q):
        raise ValueError("q must be a prime power >= 7")
    top = (q + 1) / (8 * math.log2(q) * (math.sqrt((q + 1) / 2) + math.sqrt((q - 1) / 2)))
    return loglog(top) / loglog(q * (q * q - 1))


def eps_q_lower_classical(d: int, q: int) -> float:
    """The rank-d classical lower bound on eps_q, evaluated in log space.

    The numerator is loglog(Q + 3) where Q is the closed-form quotient
    lower bound; the + 3 shift is part of the invariant being bounded and
    is what carries the recorded q0 thresholds (without it the rows
    d = 2..6 and d = 10 land below the target, see INTERPRETATION_DIFFS).
    """
    if not 2 <= d <= 53:
        raise ValueError("d must be between 2 and 53")
    if not numkit.is_prime_power(q):
        raise ValueError("q must be a prime power")
    c = 6 if d == 4 else 2
    logq = math.log(q)
    log_inner = (
        d * logq
        - math.log(2 * c)
        - math.log(math.log2(q))
        - 2 * math.log(min(d + 1, q + 1))
        - math.log(partitions.g2(d))
        - math.log(1 + math.ceil(math.log2(2 * d)))
        - (d / 2) * math.log(q + 1)
    )
    if log_inner > 40:  # the shift is below float resolution there
        num = math.log(log_inner)
    else:
        num = math.log(math.log(math.exp(log_inner) + 3))
    return num / math.log(4 * d * d * logq)


REFERENCE_Q0: Dict[int, int] = {1: 1100543, 2: 62753, 3: 4903, 4: 1801, 5: 401,
                                6: 197, 7: 121, 8: 79, 9: 59, 10: 43, 11: 37,
                                12: 29, 13: 25, 14: 23, 15: 19, 16: 16, 17: 16,
                                18: 13, 19: 11, 20: 11, 21: 11, 22: 9, 23: 8,
                                24: 8, 25: 8}
REFERENCE_Q0.update({d: 7 for d in range(26, 35)})
REFERENCE_Q0.update({d: 5 for d in range(35, 46)})
REFERENCE_Q0.update({d: 4 for d in range(46, 54)})


class Q0Row(NamedTuple):
    d: int
    q0: int
    value: float
    margin: float
    passes: bool


def scan_q0() -> Tuple[Q0Row, ...]:
    """Evaluate every (d, q0(d)) threshold row against eps_q(M)."""
    rows = []
    for d in sorted(REFERENCE_Q0):
        q0 = REFERENCE_Q0[d]
        val = psl2_eps_q_lower(q0) if d == 1 else eps_q_lower_classical(d, q0)
        margin = val - EPS_Q_MONSTER
        rows.append(Q0Row(d, q0, val, margin, margin > EPS_GUARD))
    return tuple(rows)


def eps_q_rough(d: int, q: int) -> float:
    """Closed-form rough lower bound on eps_q for high rank at q = 2 or 3.

    The q = 3 variant is the one valid for all q >= 3.
    """
    if d < 1:
        raise ValueError("d must be positive")
    root = 2 * math.pi / math.sqrt(3) * math.sqrt(d)
    tail = root + 3 * math.log(d + 1) + math.log(2 + math.log(2 * d) / math.log(2)) + math.log(4)
    if q == 2:
        inner = (1 - math.log(3) / math.log(4)) * d - tail / math.log(2)
        num = (math.log(inner) if inner > 0 else NEG_INF) + loglog(2)
        return num / (math.log(4 * d * d) + loglog(2))
    if q == 3:
        inner = (1 - math.log(4) / math.log(9)) * d - tail / math.log(3) - 1 / (math.e * math.log(2))
        num = math.log(inner) if inner > 0 else NEG_INF
        return num / math.log(4 * d * d)
    raise ValueError("the rough bound is tabulated for q = 2 and q = 3 only")


# ---------------------------------------------------------------------------
# exceptional-family scan

# family -> (ktor, h, kappa exponent, kappa divisor, c, e, rank)
_EXC_SCAN: Dict[str, Tuple[int, int, int, int, int, int, int]] = {
    "2B2": (3, 4, 2, 1, 2, 10, 2),
    "G2": (6, 6, 2, 1, 2, 14, 2),
    "2G2": (4, 6, 2, 1, 2, 14, 2),
    "F4": (25, 12, 4, 1, 2, 52, 4),
    "2F4": (11, 12, 4, 1, 2, 52, 4),
    "3D4": (7, 6, 4, 1, 3, 29, 4),
    "E6": (25, 12, 6, 3, 6, 78, 6),
    "2E6": (25, 12, 6, 3, 6, 78, 6),
    "E7": (60, 18, 7, 2, 2, 133, 7),
    "E8": (112, 30, 8, 1, 1, 248, 8),
}

_SUZUKI_REE_P = {"2B2": 2, "2G2": 3, "2F4": 2}

_EXC_SCAN_CAP = {"2B2": 16, "G2": 16384, "2G2": 12, "F4": 512, "2F4": 10,
                 "3D4": 256, "E6": 128, "2E6": 128, "E7": 64, "E8": 64}


class ExceptionalRow(NamedTuple):
    q: int          # field size; q^2 = p^(2m+1) for the three half-power families
    value: float
    margin: float
    fails: bool


def _exceptional_value(family: str, qq: int) -> float:
    ktor, h, kexp, kdiv, c, e, rank = _EXC_SCAN[family]
    if family in _SUZUKI_REE_P:
        qreal = math.sqrt(qq)
        kappa = qq ** (kexp // 2)
    else:
        qreal = float(qq)
        kappa = qq ** kexp / kdiv
    obar = 2 * ktor * (1 + math.ceil(math.log2(h))) * (qreal + 1) ** (rank / 2)
    inner = kappa / (c * obar * math.log2(qreal))
    return loglog(inner) / math.log(e * math.log(qreal))


def scan_exceptional_rows(family: str) -> Tuple[ExceptionalRow, ...]:
    """Per-q evaluation of the exceptional-family eps_q threshold test.

    For 2B2 / 2G2 / 2F4 the scan runs over q^2 = p^(2m+1), m >= 1, and the
    reported q column holds those odd prime powers.
    """
    if family not in _EXC_SCAN:
        raise ValueError(f"unknown exceptional family {family!r}")
    rows = []
    p = _SUZUKI_REE_P.get(family)
    if p is not None:
        qs: Iterable[int] = (p ** (2 * m + 1) for m in range(1, _EXC_SCAN_CAP[family] + 1))
    else:
        qs = numkit.iter_prime_powers(2, _EXC_SCAN_CAP[family])
    for qq in qs:
        val = _exceptional_value(family, qq)
        margin = val - EPS_Q_MONSTER
        rows.append(ExceptionalRow(qq, val, margin, not margin > EPS_GUARD))
    return tuple(rows)


def scan_exceptional(family: str) -> FrozenSet[int]:
    """The set of field sizes where the exceptional threshold test fails."""
    return frozenset(r.q for r in scan_exceptional_rows(family) if r.fails)


# ---------------------------------------------------------------------------
# rank <= 2 scan


class SmallRankRow(NamedTuple):
    q: int
    crude: float
    crude_valid: bool
    value1: float
    fails1: bool
    value2: Optional[float]
    fails2: Optional[bool]


class SmallRankScan(NamedTuple):
    fails1: FrozenSet[int]
    fails2: FrozenSet[int]


_SMALL_RANK_START = {"A1": 7, "A2": 3, "2A2": 3, "B2": 3, "G2": 3}
_SMALL_RANK_CAP = {"A1": 4096, "A2": 512, "2A2": 512, "B2": 256, "G2": 256,
                   "2B2": 12, "2G2": 12}


def _small_rank_id(key: str, q: int) -> LieGroupId:
    fam, d, twist = {"A1": ("A", 1, 1), "A2": ("A", 2, 1), "2A2": ("A", 2, 2),
                     "B2": ("B", 2, 1), "G2": ("G2", 2, 1)}[key]
    return liecat.from_q(fam, d, q, twist)


def _small_rank_crude(key: str, q: int) -> float:
    l2 = math.log2(q)
    if key == "A1":
        return q / (4 * l2)
    if key in ("A2", "2A2"):
        return q * q / (18 * l2)
    if key == "B2":
        return q * q / (4 * l2)
    return q * q / (2 * l2)  # G2


def _small_rank_sbar(key: str, q: int) -> int:
    exp = {"A1": 3, "A2": 8, "2A2": 8, "B2": 10, "G2": 14}[key]
    return q ** exp


def scan_small_rank_rows(family: str) -> Tuple[SmallRankRow, ...]:
    """Two-stage scan for the seven untwisted-rank <= 2 families.

    Stage 1 tests loglog(crude) / loglog(|S| upper) against
    eps_omega(Alt(5)), where crude is the tabulated closed-form lower bound
    on omega; a q also lands in fails1 when crude exceeds kappa / |Out| and
    so is not actually a lower bound there (this is what puts both Suzuki
    parameters k = 1, 2 in fails1).  Stage 2 rechecks the fails1 members
    with exact kappa, |Out| and |S|; the quotient kappa / |Out| is used
    unrounded (rounding up would drop q = 13 from the A1 column).
    """
    key = {"C2": "B2"}.get(family, family)
    if key in ("2B2", "2G2"):
        return _scan_small_rank_suzuki_ree(key)
    if key not in _SMALL_RANK_START:
        raise ValueError(f"unknown rank <= 2 family {family!r}")
    rows = []
    for q in numkit.iter_prime_powers(_SMALL_RANK_START[key], _SMALL_RANK_CAP[key]):
        S = _small_rank_id(key, q)
        kappa = _small_family_kappa(key, S)
        out = liecat.out_order(S)
        crude = _small_rank_crude(key, q)
        valid = crude * out <= kappa
        v1 = loglog(crude) / loglog(_small_rank_sbar(key, q))
        f1_ = (not valid) or not v1 > EPS_OMEGA_ALT5 + EPS_GUARD
        v2 = f2 = None
        if f1_:
            v2 = loglog(kappa / out) / loglog(liecat.order_of(S))
            f2 = not v2 > EPS_OMEGA_ALT5 + EPS_GUARD
        rows.append(SmallRankRow(q, crude, valid, v1, f1_, v2, f2))
    return tuple(rows)


def _scan_small_rank_suzuki_ree(key: str) -> Tuple[SmallRankRow, ...]:
    p = 2 if key == "2B2" else 3
    rows = []
    for m in range(1, _SMALL_RANK_CAP[key] + 1):
        qq = p ** (2 * m + 1)
        S = LieGroupId("B" if key == "2B2" else "G2", 2, p, 2 * m + 1, twist=2, f_den=2)
        kappa = _small_family_kappa(key, S)
        out = 2 * m + 1
        crude = float(p ** (m + 1))
        valid = crude * out <= kappa
        sbar = p ** ((10 * m + 6) if key == "2B2" else (14 * m + 8))
        v1 = loglog(crude) / loglog(sbar)
        f1_ = (not valid) or not v1 > EPS_OMEGA_ALT5 + EPS_GUARD
        v2 = f2 = None
        if f1_:
            v2 = loglog(kappa / out) / loglog(liecat.order_of(S))
            f2 = not v2 > EPS_OMEGA_ALT5 + EPS_GUARD
        rows.append(SmallRankRow(qq, crude, valid, v1, f1_, v2, f2))
    return tuple(rows)


def scan_small_rank(family: str) -> SmallRankScan:
    """(fails1, fails2) for one rank <= 2 family; Suzuki/Ree rows use q^2."""
    rows = scan_small_rank_rows(family)
    return SmallRankScan(
        frozenset(r.q for r in rows if r.fails1),
        frozenset(r.q for r in rows if r.fails2),
    )


# ---------------------------------------------------------------------------
# the growth function f1


def _monster_c_mp():
    m = mpmath.mpf(liecat.monster_order())
    return mpmath.log(mpmath.log(m)) / mpmath.log(mpmath.log(mpmath.mpf(413) / 73))


def f1(x) -> mpmath.mpf:
    """The explicit index bound f1(x), evaluated in extended precision.

    With y = 2^x + x and A = log(y+3)^c the value is
    exp(y A e^A) * ((y+3)/log 2)^(y e^A) * (y!)^(e^A).
    Non-finite results raise OverflowError instead of saturating.
    """
    if x < 0:
        raise ValueError("f1 is defined for x >= 0")
    with mpmath.workdps(60):
        c = _monster_c_mp()
        y = mpmath.power(2, x) + x
        a = mpmath.power(mpmath.log(y + 3), c)
        ea = mpmath.exp(a)
        val = (
            mpmath.exp(y * a * ea)
            * mpmath.power((y + 3) / mpmath.log(2), y * ea)
            * mpmath.power(mpmath.gamma(y + 1), ea)
        )
    if not mpmath.isfinite(val):
        raise OverflowError(f"f1({x!r}) exceeds extended-precision range")
    return val


# ---------------------------------------------------------------------------
# reference columns and recorded divergences

# (omega lower, o relation, o value, eps_q lower) per group; the omega
# column mixes routes of different strength and is reference data, not a
# golden target for omega_lower (see INTERPRETATION_DIFFS and the module
# tests for which cells the implemented formulas pin).
REFERENCE_ONLY_OMICRON: Dict[str, Tuple[int, str, int, float]] = {
    "A2(p=2,f=6)": (39, "=", 26, 0.11759),
    "A4(p=2,f=4)": (350, "<=", 86, 0.1607),
    "A5(p=3,f=1)": (51, "=", 33, 0.114388),
    "2A2(p=23,f=1)": (32, "<=", 20, 0.13303),
    "2A2(p=29,f=1)": (49, "<=", 25, 0.14480),
    "2A3(p=3,f=2)": (56, "<=", 27, 0.13961),
    "2A4(p=3,f=2)": (76, "<=", 41, 0.11623),
    "2A5(p=3,f=1)": (66, "<=", 35, 0.12715),
    "D5(p=5,f=1)": (166, "<=", 81, 0.11635),
    "D7(p=3,f=1)": (557, "<=", 113, 0.16116),
}

# (W, obar, eps_q lower) for the ten groups handled by explicit form counts.
REFERENCE_REMAINING: Dict[str, Tuple[int, int, float]] = {
    "2A3(p=11,f=1)": (29, 38, 0.12567),
    "2A5(p=5,f=1)": (65, 70, 0.11677),
    "2A7(p=3,f=1)": (84, 76, 0.11593),
    "2A8(p=2,f=1)": (48, 48, 0.11922),
    "D4(p=5,f=1)": (17, 31, 0.11483),
    "D4(p=7,f=1)": (35, 47, 0.11611),
    "D4(p=3,f=2)": (38, 47, 0.11459),
    "D5(p=3,f=1)": (30, 44, 0.1153),
    "D6(p=3,f=1)": (69, 61, 0.11808),
    "2D5(p=3,f=1)": (23, 29, 0.1161),
}

# kappa = 356, omega >= 13 (refined), o <= 10, eps_q >= 0.11502.
REFERENCE_SINGLE_GROUP: Tuple[str, int, int, int, float] = (
    "2A2(p=2,f=5)", 356, 13, 10, 0.11502)

REFERENCE_EXCEPTIONAL_REMAINING: Dict[str, FrozenSet[int]] = {
    "2B2": frozenset(2 ** (2 * m + 1) for m in range(1, 11)),
    "G2": frozenset(numkit.iter_prime_powers(2, 6946)),
    "2G2": frozenset(3 ** (2 * m + 1) for m in range(1, 9)),
    "F4": frozenset(numkit.iter_prime_powers(2, 156)),
    "2F4": frozenset(2 ** (2 * m + 1) for m in range(1, 7)),
    "3D4": frozenset(numkit.iter_prime_powers(2, 78)),
    "E6": frozenset(numkit.iter_prime_powers(2, 58)),
    "2E6": frozenset(numkit.iter_prime_powers(2, 58)),
    "E7": frozenset(numkit.iter_prime_powers(2, 28)),
    "E8": frozenset(numkit.iter_prime_powers(2, 15)),
}

REFERENCE_SMALL_RANK: Dict[str, Tuple[FrozenSet[int], FrozenSet[int]]] = {
    "A1": (frozenset(numkit.iter_prime_powers(7, 199)),
           frozenset({7, 8, 9, 11, 13, 16, 25, 27})),
    "A2": (frozenset(numkit.iter_prime_powers(3, 25)), frozenset({4, 7, 16})),
    "2A2": (frozenset(numkit.iter_prime_powers(3, 25)), frozenset({5, 8})),
    "B2": (frozenset(numkit.iter_prime_powers(3, 9)), frozenset()),
    "G2": (frozenset(numkit.iter_prime_powers(3, 5)), frozenset()),
    "2B2": (frozenset({8, 32}), frozenset({8})),
    "2G2": (frozenset(), frozenset()),
}


class InterpretationDiff(NamedTuple):
    computed: object
    reference: object
    note: str


INTERPRETATION_DIFFS: Dict[str, InterpretationDiff] = {
    "oBarRefined:D7(p=3,f=1)": InterpretationDiff(
        118, 113,
        "Layer sum gives 118 against a recorded 113.  No choice in the "
        "layered rule reproduces 113 while keeping the seventeen matching "
        "cells; the computed value is kept."),
    "oBarRefined:D6(p=3,f=1)": InterpretationDiff(
        65, 61,
        "Layer sum gives 65 against a recorded 61; same situation as "
        "D7(p=3,f=1)."),
    "oBarRefined:2D5(p=3,f=1)": InterpretationDiff(
        38, 29,
        "Layer sum gives 38 against a recorded 29.  Direct matrix "
        "computations exhibit more than 29 distinct element orders in the "
        "group itself, so 29 cannot be an upper bound on o(S); the "
        "computed 38 is kept."),
    "scanSmallRank:A1:fails2": InterpretationDiff(
        frozenset({7, 8, 9, 11, 13, 16, 25, 27, 81}),
        frozenset({7, 8, 9, 11, 13, 16, 25, 27}),
        "The stage-2 test at q = 81 gives 0.2310 (quotient rounded up) or "
        "0.2059 (unrounded), both below the 0.23172 threshold, so the scan "
        "keeps 81; the reference column omits it.  The group itself is "
        "safely above the threshold (its order count alone gives 0.346), "
        "so only this intermediate column is affected."),
    "scanSmallRank:2A2:fails2": InterpretationDiff(
        frozenset({4, 5, 8}),
        frozenset({5, 8}),
        "With the unrounded quotient 22/4 the q = 4 test gives 0.2207, "
        "just below the threshold, so the scan keeps 4; rounding the "
        "quotient up would pass it (0.2428) but would also drop 13 from "
        "the A1 column, which the reference keeps.  Superset is the "
        "conservative direction."),
    "scanExceptional:2G2": InterpretationDiff(
        frozenset(3 ** (2 * m + 1) for m in range(1, 8)),
        frozenset(3 ** (2 * m + 1) for m in range(1, 9)),
        "At q^2 = 3^17 the threshold expression evaluates to 0.1944, well "
        "above 0.114045, so the scan stops at 3^15; the reference column "
        "lists 3^17 as well.  A reference superset is harmless since the "
        "listed cases are the ones handled separately."),
    "epsQLowerClassical:+3": InterpretationDiff(
        "loglog(Q + 3) numerator", "loglog(Q) numerator",
        "The recorded display drops the + 3 shift from the quotient before "
        "taking loglog.  That weaker form evaluates below the target at "
        "the recorded thresholds for d = 2, 3, 4, 5, 6 and 10 (e.g. 0.0992 "
        "at (5, 401) against 0.114045), so the thresholds can only have "
        "been produced with the shift in place; the implementation keeps "
        "it.  For d >= 7 (except 10) both forms clear the target at the "
        "recorded q0."),
    "ossBarSimple:A90q2": InterpretationDiff(
        4235078857, 4235078858,
        "The tau-sum over the 1227438 reduced partitions of 91 evaluates "
        "to 4235078857 under two independent factorization pipelines and "
        "two independent enumeration orders; the recorded table value is "
        "exactly one greater.  At q = 2 the linear-type exponents carry no "
        "center correction, leaving no reading that adds one."),
    "onlyOmicronEps:D5(p=5,f=1)": InterpretationDiff(
        0.1130697, 0.11635,
        "loglog(omega_low/obar + 3) / loglog|S| from the recorded columns "
        "(166, 81) gives 0.1130697, below the recorded cell and below the "
        "0.114045 target; no integer pair aligned with either recorded "
        "column reproduces the cell."),
    "onlyOmicronEps:D7(p=3,f=1)": InterpretationDiff(
        0.1583372, 0.16116,
        "The recorded columns (557, 113) give 0.1583372, safely above the "
        "0.114045 target but below the recorded cell, which no aligned "
        "integer pair reproduces."),
    "remainingEps:D4(p=5,f=1)": InterpretationDiff(
        0.1099798, 0.11483,
        "loglog((obar + W)/obar + 3) / loglog|S| from the recorded columns "
        "(W = 17, obar = 31) gives 0.1099798, below the recorded cell and "
        "below the 0.114045 target.  The cell matches W = 21 against the "
        "same obar exactly, and no other integer pair nearby does, so it "
        "reflects a different surplus count than the recorded row sums."),
    "remainingEps:D4(p=7,f=1)": InterpretationDiff(
        0.1114812, 0.11611,
        "The recorded columns (W = 35, obar = 47) give 0.1114812, below "
        "the recorded cell and below the 0.114045 target.  The cell "
        "matches the pair (obar, W) = (43, 38) exactly and no other "
        "integer pair nearby."),
    "remainingEps:D4(p=3,f=2)": InterpretationDiff(
        0.1101754, 0.11459,
        "The recorded columns (W = 38, obar = 47) give 0.1101754, below "
        "the recorded cell and below the 0.114045 target.  The cell "
        "matches (obar, W) = (58, 55) exactly and no other integer pair "
        "nearby."),
    "remainingEps:D5(p=3,f=1)": InterpretationDiff(
        0.1117909, 0.1153,
        "The recorded columns (W = 30, obar = 44) give 0.1117909, below "
        "the recorded cell and below the 0.114045 target.  Several "
        "integer pairs land on the recorded 4-digit cell, none of them "
        "the recorded columns."),
    "remainingEps:D6(p=3,f=1)": InterpretationDiff(
        0.115388, 0.11808,
        "The recorded columns (W = 69, obar = 61) give 0.115388, above "
        "the 0.114045 target but below the recorded cell.  No integer "
        "pair near the recorded columns reproduces the cell."),
}
