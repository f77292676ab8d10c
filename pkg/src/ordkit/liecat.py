"""Catalog of finite simple groups: identifiers, orders, outer bounds.

Group ids carry the field size as an exact (p, f_num/f_den) pair so the
Suzuki and Ree families (where f is half an odd integer) stay exact.
Sporadic orders and the exact-value reference table are embedded
constants from standard computational sources; both are validated by
reproducing their printed epsilon columns rather than trusted blindly.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from typing import Iterator, Tuple

from sympy import factorint, isprime

__all__ = [
    "LieGroupId",
    "SporadicRecord",
    "ExactValueRecord",
    "parse_group_id",
    "from_q",
    "order_of",
    "order_upper_bound",
    "out_order",
    "out_order_upper",
    "coxeter_number",
    "inndiag_index",
    "ktor_constant",
    "sporadic_table",
    "sporadic_record",
    "monster_order",
    "aliases",
    "reference_exact_table",
    "REFERENCE_EPS_DIVERGENT",
    "iter_catalog",
]

_FAMILIES = ("A", "B", "C", "D", "E6", "E7", "E8", "F4", "G2")

# families where the field exponent may be half an odd integer
_HALF_F = {("B", 2, 2), ("G2", 2, 3), ("F4", 2, 2)}


@dataclass(frozen=True)
class LieGroupId:
    family: str
    d: int
    p: int
    f_num: int
    twist: int = 1
    f_den: int = 1

    def __post_init__(self):
        if self.family not in _FAMILIES:
            raise ValueError(f"unknown family {self.family!r}")
        if not isprime(self.p):
            raise ValueError(f"p={self.p} is not prime")
        if self.f_num < 1 or self.f_den not in (1, 2):
            raise ValueError("bad field exponent")
        if self.twist not in (1, 2, 3):
            raise ValueError("twist must be 1, 2 or 3")
        fam, d, tw = self.family, self.d, self.twist
        if fam in ("E6", "E7", "E8", "F4", "G2"):
            if d != int(fam[1]):
                raise ValueError(f"{fam} has rank {fam[1]}")
        ranks = {"A": 1, "B": 2, "C": 2, "D": 3}
        if fam in ranks and d < ranks[fam]:
            raise ValueError(f"rank too small for {fam}")
        if tw == 3 and (fam, d) != ("D", 4):
            raise ValueError("triality needs D4")
        if tw == 2:
            ok = (
                (fam == "A" and d >= 2)
                or (fam == "D" and d >= 2)
                or fam == "E6"
                or (fam, d, self.p) in (("B", 2, 2), ("G2", 2, 3), ("F4", 4, 2))
            )
            if not ok:
                raise ValueError(f"no twisted form ^2{fam}{d} over p={self.p}")
        if self.f_den == 2:
            if not (
                tw == 2
                and ((fam, self.p) in (("G2", 3), ("F4", 2)) or (fam, d, self.p) == ("B", 2, 2))
            ):
                raise ValueError("half-integral f only for Suzuki/Ree types")
            if self.f_num % 2 == 0:
                raise ValueError("half-integral f must be odd/2")
        elif tw == 2 and (fam in ("G2", "F4") or (fam, d) == ("B", 2)):
            raise ValueError("Suzuki/Ree types need half-integral f")

    # --- field helpers -----------------------------------------------------
    @property
    def q(self) -> int:
        """q as an integer; rejects the half-integral Suzuki/Ree case."""
        if self.f_den != 1:
            raise ValueError("q is not integral here; use q2")
        return self.p ** self.f_num

    @property
    def q2(self) -> int:
        """q^2, always integral."""
        return self.p ** (2 * self.f_num // self.f_den)

    @property
    def log_q(self) -> float:
        return self.f_num / self.f_den * math.log(self.p)

    @property
    def f(self) -> int:
        """Integer f for the classical families (f_den = 1)."""
        if self.f_den != 1:
            raise ValueError("f is half-integral here")
        return self.f_num

    @property
    def is_suzuki_ree(self) -> bool:
        return self.f_den == 2

    # --- naming ------------------------------------------------------------
    def spec_string(self) -> str:
        tw = "" if self.twist == 1 else str(self.twist)
        fam = self.family if self.family in ("A", "B", "C", "D") else self.family[0]
        rank = str(self.d)
        f = f"{self.f_num}/2" if self.f_den == 2 else str(self.f_num)
        return f"{tw}{fam}{rank}(p={self.p},f={f})"

    def display(self) -> str:
        head = f"^{self.twist}" if self.twist > 1 else ""
        e = self.twist * self.f_num // self.f_den
        field = str(self.p) if e == 1 else f"{self.p}^{e}"
        letter = self.family[0]
        return f"{head}{letter}_{self.d}({field})"

    # --- structure ---------------------------------------------------------
    @property
    def coxeter(self) -> int:
        return coxeter_number(self.family, self.d)

    def is_simple(self) -> bool:
        fam, d, tw = self.family, self.d, self.twist
        if self.f_den == 2 and self.f_num == 1:
            return False  # 2B2(2), 2G2(3), 2F4(2)
        if self.f_den == 2:
            return True
        q = self.q
        if fam == "A" and d == 1 and q in (2, 3):
            return False
        if fam == "A" and d == 2 and tw == 2 and q == 2:
            return False
        if fam in ("B", "C") and d == 2 and q == 2:
            return False
        if fam == "G2" and tw == 1 and q == 2:
            return False
        return True


_ID_RE = re.compile(r"^(?:([23]))?([A-G])(\d+)\(p=(\d+),f=(\d+)(/2)?\)$")


def parse_group_id(s: str) -> LieGroupId:
    m = _ID_RE.match(s.strip())
    if not m:
        raise ValueError(f"cannot parse group id {s!r}")
    tw, letter, rank, p, fnum, half = m.groups()
    d = int(rank)
    family = letter if letter in ("A", "B", "C", "D") else f"{letter}{d}"
    return LieGroupId(
        family=family,
        d=d,
        p=int(p),
        f_num=int(fnum),
        twist=int(tw) if tw else 1,
        f_den=2 if half else 1,
    )


def from_q(family: str, d: int, q: int, twist: int = 1) -> LieGroupId:
    """Convenience constructor taking an integral q."""
    fac = factorint(q)
    if len(fac) != 1:
        raise ValueError(f"q={q} is not a prime power")
    (p, f), = fac.items()
    return LieGroupId(family=family, d=d, p=int(p), f_num=int(f), twist=twist)


# ---------------------------------------------------------------------------
# orders

def _order_formula(S: LieGroupId) -> int:
    fam, d, tw = S.family, S.d, S.twist
    if S.f_den == 2:
        Q = S.q2
        if fam == "B":
            return Q ** 2 * (Q - 1) * (Q ** 2 + 1)
        if fam == "G2":
            return Q ** 3 * (Q - 1) * (Q ** 3 + 1)
        return Q ** 12 * (Q ** 6 + 1) * (Q ** 4 - 1) * (Q ** 3 + 1) * (Q - 1)
    q = S.q
    if fam == "A" and tw == 1:
        body = q ** (d * (d + 1) // 2) * math.prod(q ** i - 1 for i in range(2, d + 2))
        return body // math.gcd(d + 1, q - 1)
    if fam == "A":
        body = q ** (d * (d + 1) // 2) * math.prod(
            q ** i - (-1) ** i for i in range(2, d + 2)
        )
        return body // math.gcd(d + 1, q + 1)
    if fam in ("B", "C"):
        body = q ** (d * d) * math.prod(q ** (2 * i) - 1 for i in range(1, d + 1))
        return body // math.gcd(2, q - 1)
    if fam == "D" and tw == 1:
        body = (
            q ** (d * (d - 1))
            * (q ** d - 1)
            * math.prod(q ** (2 * i) - 1 for i in range(1, d))
        )
        return body // math.gcd(4, q ** d - 1)
    if fam == "D" and tw == 2:
        body = (
            q ** (d * (d - 1))
            * (q ** d + 1)
            * math.prod(q ** (2 * i) - 1 for i in range(1, d))
        )
        return body // math.gcd(4, q ** d + 1)
    if fam == "D":  # triality
        return q ** 12 * (q ** 8 + q ** 4 + 1) * (q ** 6 - 1) * (q ** 2 - 1)
    if fam == "G2":
        return q ** 6 * (q ** 6 - 1) * (q ** 2 - 1)
    if fam == "F4":
        return q ** 24 * (q ** 12 - 1) * (q ** 8 - 1) * (q ** 6 - 1) * (q ** 2 - 1)
    if fam == "E6" and tw == 1:
        body = q ** 36 * math.prod(q ** i - 1 for i in (2, 5, 6, 8, 9, 12))
        return body // math.gcd(3, q - 1)
    if fam == "E6":
        body = (
            q ** 36
            * (q ** 2 - 1)
            * (q ** 5 + 1)
            * (q ** 6 - 1)
            * (q ** 8 - 1)
            * (q ** 9 + 1)
            * (q ** 12 - 1)
        )
        return body // math.gcd(3, q + 1)
    if fam == "E7":
        body = q ** 63 * math.prod(q ** i - 1 for i in (2, 6, 8, 10, 12, 14, 18))
        return body // math.gcd(2, q - 1)
    return q ** 120 * math.prod(q ** i - 1 for i in (2, 8, 12, 14, 18, 20, 24, 30))


def order_of(S: LieGroupId, allow_nonsimple: bool = False) -> int:
    """Exact group order.

    For the handful of parameter combinations where the group defined by
    the same formula is not simple, the call is rejected unless
    allow_nonsimple is set; the returned order is then the full group's.
    """
    if not S.is_simple() and not allow_nonsimple:
        raise ValueError(f"{S.display()} is not simple; pass allow_nonsimple to proceed")
    return _order_formula(S)


def order_upper_bound(S: LieGroupId) -> int:
    """q^(4 d^2), rounded up to an integer power of p when f is half-integral."""
    e = 4 * S.d * S.d * S.f_num
    return S.p ** -(-e // S.f_den)


def coxeter_number(family: str, d: int) -> int:
    if family == "A":
        return d + 1
    if family in ("B", "C"):
        return 2 * d
    if family == "D":
        return 2 * d - 2
    table = {"G2": 6, "F4": 12, "E6": 12, "E7": 18, "E8": 30}
    if family not in table:
        raise ValueError(f"unknown family {family!r}")
    return table[family]


def inndiag_index(S: LieGroupId) -> int:
    fam, d, tw = S.family, S.d, S.twist
    if S.f_den == 2:
        return 1
    q = S.q
    if fam == "A":
        return math.gcd(d + 1, q - 1) if tw == 1 else math.gcd(d + 1, q + 1)
    if fam in ("B", "C"):
        return math.gcd(2, q - 1)
    if fam == "D":
        if tw == 1:
            return math.gcd(4, q ** d - 1)
        if tw == 2:
            return math.gcd(4, q ** d + 1)
        return 1
    if fam == "E6":
        return math.gcd(3, q - 1) if tw == 1 else math.gcd(3, q + 1)
    if fam == "E7":
        return math.gcd(2, q - 1)
    return 1


def out_order(S: LieGroupId) -> int:
    """|Out(S)|: tabulated formulas for the small-rank families, standard
    products elsewhere.  The G2 entry keeps the tabulated gcd(2,q-1)f form
    even where it overshoots, because the small-rank scans are defined
    against it."""
    fam, d, tw = S.family, S.d, S.twist
    if S.f_den == 2:
        return S.f_num  # cyclic of order 2k+1
    q, f = S.q, S.f_num
    if fam == "A" and tw == 1:
        return math.gcd(2, q - 1) * f if d == 1 else math.gcd(d + 1, q - 1) * 2 * f
    if fam == "A":
        return math.gcd(d + 1, q + 1) * 2 * f
    if fam in ("B", "C"):
        if d == 2:
            return 2 * f
        return math.gcd(2, q - 1) * f
    if fam == "G2":
        return math.gcd(2, q - 1) * f
    if fam == "D":
        if tw == 3:
            return 3 * f
        diag = inndiag_index(S)
        graph = 6 if (d == 4 and tw == 1) else 2
        return diag * graph * f
    if fam == "E6":
        return inndiag_index(S) * 2 * f
    if fam == "E7":
        return math.gcd(2, q - 1) * f
    if fam == "F4":
        return 2 * f if S.p == 2 else f
    return f  # E8


_EXC_OUT_BAR = {
    ("B", 2): lambda S: S.f_num,  # 2B2: 2f with f = f_num/2
    ("G2", 1): lambda S: 2 * S.f_num,
    ("G2", 2): lambda S: S.f_num,
    ("F4", 1): lambda S: 2 * S.f_num,
    ("F4", 2): lambda S: S.f_num,
    ("D", 3): lambda S: 3 * S.f_num,
    ("E6", 1): lambda S: 6 * S.f_num,
    ("E6", 2): lambda S: 6 * S.f_num,
    ("E7", 1): lambda S: 2 * S.f_num,
    ("E8", 1): lambda S: S.f_num,
}


def out_order_upper(S: LieGroupId) -> int:
    """Upper bound on |Out(S)|: the per-family table for exceptional
    types, else min of the generic min{d+1,q+1}*6f bound and log2|S|."""
    key = (S.family, S.twist)
    if S.family in ("G2", "F4", "E6", "E7", "E8") or key in (("B", 2), ("D", 3)):
        if key in _EXC_OUT_BAR and (S.family != "B" or S.f_den == 2):
            return _EXC_OUT_BAR[key](S)
    generic = min(S.d + 1, S.q + 1) * 6 * S.f_num
    kohl = _order_formula(S).bit_length() - 1
    return min(generic, kohl)


def ktor_constant(family: str, twist: int = 1) -> int:
    table = {
        ("B", 2): 3,
        ("G2", 1): 6,
        ("G2", 2): 4,
        ("F4", 1): 25,
        ("F4", 2): 11,
        ("D", 3): 7,
        ("E6", 1): 25,
        ("E6", 2): 25,
        ("E7", 1): 60,
        ("E8", 1): 112,
    }
    key = (family, twist)
    if key not in table:
        raise ValueError(f"no torus-class constant for {family} twist {twist}")
    return table[key]


# ---------------------------------------------------------------------------
# sporadic groups

@dataclass(frozen=True)
class SporadicRecord:
    name: str
    order: int
    o_count: int
    omega_count: int
    eps_omega_ref: float
    eps_q_ref: float


_SPORADIC_ROWS = (
    ("M11", 7920, 8, 10, 0.380024, 0.168333),
    ("M12", 95040, 9, 12, 0.373194, 0.156934),
    ("M22", 443520, 9, 11, 0.340952, 0.142251),
    ("M23", 10200960, 12, 17, 0.374450, 0.142269),
    ("M24", 244823040, 15, 26, 0.398909, 0.149020),
    ("HS", 44352000, 13, 21, 0.388150, 0.148125),
    ("J2", 604800, 11, 16, 0.393933, 0.155060),
    ("Co1", 4157776806543360000, 32, 101, 0.406933, 0.158971),
    ("Co2", 42305421312000, 21, 60, 0.409051, 0.165308),
    ("Co3", 495766656000, 21, 42, 0.400357, 0.144505),
    ("McL", 898128000, 15, 19, 0.356873, 0.122978),
    ("Suz", 448345497600, 19, 37, 0.390324, 0.142663),
    ("He", 4030387200, 15, 26, 0.381463, 0.142502),
    ("HN", 273030912000000, 22, 44, 0.379828, 0.135821),
    ("Th", 90745943887872000, 25, 48, 0.369346, 0.127106),
    ("Fi22", 64561751654400, 22, 59, 0.406280, 0.159655),
    ("Fi23", 4089470473293004800, 32, 98, 0.405230, 0.156730),
    ("Fi24'", 1255205709190661721292800, 35, 97, 0.378603, 0.139755),
    ("B", 4154781481226426191177580544000000, 49, 184, 0.379739, 0.148826),
    ("M", 808017424794512875886459904961710757005754368000000000, 73, 194, 0.344642, 0.114045),
    ("J1", 175560, 10, 15, 0.399899, 0.163849),
    ("O'N", 460815505920, 18, 25, 0.355275, 0.118954),
    ("J3", 50232960, 13, 17, 0.362182, 0.131708),
    ("Ru", 145926144000, 18, 36, 0.393116, 0.146573),
    ("J4", 86775571046077562880, 31, 62, 0.370447, 0.124360),
    ("Ly", 51765179004000000, 28, 53, 0.377735, 0.126657),
    ("T", 17971200, 11, 17, 0.369863, 0.147333),
)

_SPORADIC = tuple(SporadicRecord(*row) for row in _SPORADIC_ROWS)
_SPORADIC_BY_NAME = {r.name: r for r in _SPORADIC}


def sporadic_table() -> Tuple[SporadicRecord, ...]:
    return _SPORADIC


def sporadic_record(name: str) -> SporadicRecord:
    try:
        return _SPORADIC_BY_NAME[name]
    except KeyError:
        raise ValueError(f"unknown sporadic group {name!r}") from None


def monster_order() -> int:
    return _SPORADIC_BY_NAME["M"].order


# ---------------------------------------------------------------------------
# alias edges between coincident small groups; stored, never auto-resolved

_ALIASES = (
    ("A1(p=2,f=2)", "A1(p=5,f=1)", "Alt(5)"),
    ("A2(p=2,f=1)", "A1(p=7,f=1)"),
    ("A1(p=3,f=2)", "Alt(6)"),
    ("A3(p=2,f=1)", "Alt(8)"),
    ("B2(p=3,f=1)", "2A3(p=2,f=1)"),
)


def aliases() -> Tuple[Tuple[str, ...], ...]:
    return _ALIASES


# ---------------------------------------------------------------------------
# reference table of exactly known (omega, o, eps_q) values

@dataclass(frozen=True)
class ExactValueRecord:
    group: str
    omega: int
    o: int
    eps_q_ref: float
    simple: bool = True

    @property
    def id(self) -> LieGroupId:
        return parse_group_id(self.group)


_EXACT_ROWS = (
    ("A2(p=2,f=1)", 5, 5, 0.199907, True),
    ("A2(p=2,f=2)", 6, 6, 0.142406, True),
    ("A2(p=7,f=1)", 15, 10, 0.152856, True),
    ("A2(p=2,f=3)", 17, 10, 0.155376, True),
    ("A2(p=3,f=2)", 32, 17, 0.160853, True),
    ("A2(p=13,f=1)", 39, 15, 0.183387, True),
    ("A2(p=2,f=4)", 20, 12, 0.141745, True),
    ("A2(p=19,f=1)", 75, 23, 0.19498, True),
    ("A2(p=5,f=2)", 72, 21, 0.193765, True),
    ("A2(p=7,f=2)", 237, 31, 0.253006, True),
    ("A3(p=2,f=1)", 12, 8, 0.177958, True),
    ("A3(p=3,f=1)", 21, 12, 0.161363, True),
    ("A3(p=2,f=2)", 36, 16, 0.16688, True),
    ("A3(p=5,f=1)", 34, 16, 0.157277, True),
    ("A3(p=7,f=1)", 137, 30, 0.210503, True),
    ("A3(p=3,f=2)", 85, 26, 0.175965, True),
    ("A3(p=13,f=1)", 358, 36, 0.260237, True),
    ("A4(p=2,f=1)", 20, 13, 0.14886, True),
    ("A4(p=3,f=1)", 72, 24, 0.178591, True),
    ("A4(p=2,f=2)", 110, 32, 0.177528, True),
    ("A5(p=2,f=1)", 44, 18, 0.166564, True),
    ("A5(p=2,f=2)", 169, 40, 0.176772, True),
    ("A6(p=2,f=1)", 77, 27, 0.163159, True),
    ("2A2(p=2,f=1)", 4, 4, 0.224773, False),
    ("2A2(p=2,f=2)", 9, 8, 0.145146, True),
    ("2A2(p=5,f=1)", 10, 9, 0.140543, True),
    ("2A2(p=2,f=3)", 10, 9, 0.126245, True),
    ("2A2(p=11,f=1)", 30, 15, 0.164402, True),
    ("2A2(p=17,f=1)", 62, 21, 0.188453, True),
    ("2A3(p=3,f=1)", 14, 10, 0.145173, True),
    ("2A3(p=2,f=2)", 35, 14, 0.175921, True),
    ("2A3(p=5,f=1)", 64, 21, 0.186343, True),
    ("2A3(p=7,f=1)", 76, 23, 0.18362, True),
    ("2A4(p=2,f=2)", 34, 19, 0.129955, True),
    ("2A5(p=2,f=1)", 44, 18, 0.167802, True),
    ("B2(p=2,f=2)", 12, 9, 0.145857, True),
    ("B2(p=2,f=3)", 21, 14, 0.134539, True),
    ("B2(p=3,f=2)", 41, 16, 0.176644, True),
    ("B3(p=3,f=1)", 52, 16, 0.195259, True),
    ("B3(p=2,f=2)", 75, 22, 0.183849, True),
    ("B3(p=5,f=1)", 136, 27, 0.209901, True),
    ("D4(p=2,f=1)", 27, 12, 0.181326, True),
    ("D4(p=3,f=1)", 38, 16, 0.161802, True),
    ("D5(p=2,f=1)", 84, 24, 0.189461, True),
    ("2D4(p=2,f=1)", 39, 15, 0.1844, True),
    ("2D4(p=3,f=1)", 100, 25, 0.195833, True),
)

_REFERENCE_EXACT = tuple(ExactValueRecord(*row) for row in _EXACT_ROWS)

# rows whose recorded eps does not reproduce from their own (omega, o, |S|):
# the D rows reproduce only with one cyclotomic factor of |S| dropped, and
# the 2A5 row's eps equals the value for ratio 17/7 rather than 44/18.
# Kept verbatim as reference data, flagged here.
REFERENCE_EPS_DIVERGENT = frozenset(
    {"D4(p=2,f=1)", "D4(p=3,f=1)", "D5(p=2,f=1)", "2A5(p=2,f=1)"}
)


def reference_exact_table() -> Tuple[ExactValueRecord, ...]:
    return _REFERENCE_EXACT


# ---------------------------------------------------------------------------
# catalog iteration for regression invariants

def iter_catalog(d_max: int, q_max: int) -> Iterator[LieGroupId]:
    """All valid ids with rank <= d_max and integral q <= q_max, plus the
    Suzuki/Ree groups with q^2 <= q_max^2."""
    qs = [q for q in range(2, q_max + 1) if len(factorint(q)) == 1]
    for q in qs:
        (p, f), = factorint(q).items()
        for d in range(1, d_max + 1):
            yield LieGroupId("A", d, p, f)
            if d >= 2:
                yield LieGroupId("A", d, p, f, twist=2)
                yield LieGroupId("B", d, p, f)
                yield LieGroupId("C", d, p, f)
            if d >= 3:
                yield LieGroupId("D", d, p, f)
                yield LieGroupId("D", d, p, f, twist=2)
        for fam in ("G2", "F4", "E6", "E7", "E8"):
            yield LieGroupId(fam, int(fam[1]), p, f)
        yield LieGroupId("E6", 6, p, f, twist=2)
        yield LieGroupId("D", 4, p, f, twist=3)
    for p, fam in ((2, "B"), (3, "G2"), (2, "F4")):
        k = 1
        while p ** k <= q_max * q_max:
            if k % 2:
                d = 2 if fam == "B" else int(fam[1])
                yield LieGroupId(fam, d, p, k, twist=2, f_den=2)
            k += 2
