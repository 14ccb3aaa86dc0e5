"""Catalog of finite simple groups touched by the exception search.

Identities, exact orders, q-part exponents, class-number bounds, and
embedded character-degree tables.  Everything is exact: orders come from
the standard product formulas over Z, bound constants are Fractions, and
degree data is read from a versioned structured-text file shipped with
the package (override the path with the CODLAB_DATA environment
variable).

A note on naming: the classical families are parametrised by the rank m
used in the search, so the PSL tag with (m, q) is the group PSL(m+1, q),
PSp is PSp(2m, q), OmegaOdd is Omega(2m+1, q), and OPlus/OMinus are the
simple groups P-Omega+/-(2m, q) (orders here are for the simple group,
not the full orthogonal group).  G2(2) is not simple; its derived
subgroup of order 6048 is the distinguished G2Prime2 tag, swept like a
sporadic group.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from importlib import resources
from math import gcd
from pathlib import Path

from .alt_codegrees import CodegreeSet, alt_codegree_set
from .exactnum import PrimePower, factor, factorial, is_prime

CLASSICAL_FAMILIES = ("PSL", "PSU", "PSp", "OmegaOdd", "OPlus", "OMinus")
EXCEPTIONAL_FAMILIES = (
    "G2", "F4", "E6", "E7", "E8", "TwistedE6", "TriD4",
    "Suzuki", "Ree", "TwistedF4",
)
LIE_FAMILIES = CLASSICAL_FAMILIES + EXCEPTIONAL_FAMILIES
FAMILIES = ("Alternating", "Sporadic", "G2Prime2") + LIE_FAMILIES

# Twisted families defined only over odd powers of a fixed prime.
_TWISTED_ODD_POWER = {"Suzuki": 2, "Ree": 3, "TwistedF4": 2}

SPORADIC_LABELS = (
    "M11", "M12", "J1", "M22", "J2", "M23", "HS", "J3", "M24", "McL",
    "He", "Ru", "Suz", "ON", "Co3", "Co2", "Fi22", "HN", "Ly", "Th",
    "Fi23", "Co1", "J4", "Fi24'", "B", "M", "2F4(2)'",
)


@dataclass(frozen=True)
class GroupId:
    """Tagged identity of a group in the catalog.

    family: one of FAMILIES; n for Alternating, name for Sporadic,
    (m, q) for classical Lie, q alone for exceptional Lie.
    """

    family: str
    n: int | None = None
    name: str | None = None
    m: int | None = None
    q: PrimePower | None = None

    def __post_init__(self) -> None:
        if self.family not in FAMILIES:
            raise ValueError(f"unknown family {self.family!r}")
        if self.family == "Alternating":
            if self.n is None or self.n < 5:
                raise ValueError("alternating groups need n >= 5")
        elif self.family == "Sporadic":
            if self.name not in SPORADIC_LABELS:
                raise ValueError(f"unknown sporadic label {self.name!r}")
        elif self.family == "G2Prime2":
            pass
        else:
            if self.q is None:
                raise ValueError(f"{self.family} needs a field size q")
            _check_lie_point(self.family, self.m, self.q)

    @property
    def label(self) -> str:
        return group_label(self)

    def __str__(self) -> str:
        return self.label


def _check_lie_point(family: str, m: int | None, q: PrimePower) -> None:
    """Reject parameters that do not name a finite simple group."""
    qv = q.q
    if family in CLASSICAL_FAMILIES:
        if m is None:
            raise ValueError(f"{family} needs a rank parameter m")
        if family == "PSL":
            if m < 1:
                raise ValueError("PSL needs m >= 1")
            if m == 1 and qv < 4:
                raise ValueError(f"PSL(2,{qv}) is not simple")
        elif family == "PSU":
            if m < 2:
                raise ValueError("PSU needs m >= 2")
            if m == 2 and qv == 2:
                raise ValueError("PSU(3,2) is not simple")
        elif family == "PSp":
            if m < 3:
                raise ValueError("PSp needs m >= 3")
        elif family == "OmegaOdd":
            if m < 2:
                raise ValueError("OmegaOdd needs m >= 2")
            if q.p == 2:
                raise ValueError("Omega(2m+1, q) requires odd q")
        else:  # OPlus / OMinus
            if m < 4:
                raise ValueError(f"{family} needs m >= 4")
    else:
        if m is not None:
            raise ValueError(f"{family} takes no rank parameter")
        fixed = _TWISTED_ODD_POWER.get(family)
        if fixed is not None:
            if q.p != fixed or q.k < 3 or q.k % 2 == 0:
                raise ValueError(
                    f"{family} needs q = {fixed}^(2a+1) with a >= 1, got {qv}"
                )
        elif family == "G2" and qv == 2:
            raise ValueError("G2(2) is not simple; use the G2Prime2 tag")


def alternating(n: int) -> GroupId:
    return GroupId("Alternating", n=n)


def sporadic(name: str) -> GroupId:
    return GroupId("Sporadic", name=name)


def lie(family: str, q: PrimePower, m: int | None = None) -> GroupId:
    return GroupId(family, m=m, q=q)


def prime_power(q: int) -> PrimePower:
    """Factor an integer into a PrimePower or reject it."""
    fac = factor(q)
    if len(fac) != 1:
        raise ValueError(f"{q} is not a prime power")
    p, k = fac[0]
    return PrimePower(p, k)


def group_label(g: GroupId) -> str:
    if g.family == "Alternating":
        return f"A{g.n}"
    if g.family == "Sporadic":
        return g.name  # type: ignore[return-value]
    if g.family == "G2Prime2":
        return "G2(2)'"
    qv = g.q.q  # type: ignore[union-attr]
    m = g.m
    if g.family == "PSL":
        return f"PSL({m + 1},{qv})"
    if g.family == "PSU":
        return f"PSU({m + 1},{qv})"
    if g.family == "PSp":
        return f"PSp({2 * m},{qv})"
    if g.family == "OmegaOdd":
        return f"Omega({2 * m + 1},{qv})"
    if g.family == "OPlus":
        return f"O+({2 * m},{qv})"
    if g.family == "OMinus":
        return f"O-({2 * m},{qv})"
    prefix = {
        "G2": "G2", "F4": "F4", "E6": "E6", "E7": "E7", "E8": "E8",
        "TwistedE6": "2E6", "TriD4": "3D4", "Suzuki": "2B2",
        "Ree": "2G2", "TwistedF4": "2F4",
    }[g.family]
    return f"{prefix}({qv})"


def parse_group_label(label: str) -> GroupId:
    """Inverse of group_label for the CLI; raises ValueError on nonsense."""
    text = label.strip()
    if text == "G2(2)'":
        return GroupId("G2Prime2")
    if text in SPORADIC_LABELS:
        return sporadic(text)
    if text.startswith("A") and text[1:].isdigit():
        return alternating(int(text[1:]))
    if "(" in text and text.endswith(")"):
        head, args = text[:-1].split("(", 1)
        pieces = [a.strip() for a in args.split(",")]
        try:
            nums = [int(a) for a in pieces]
        except ValueError as exc:
            raise ValueError(f"cannot parse group label {label!r}") from exc
        exc_prefix = {
            "G2": "G2", "F4": "F4", "E6": "E6", "E7": "E7", "E8": "E8",
            "2E6": "TwistedE6", "3D4": "TriD4", "2B2": "Suzuki",
            "2G2": "Ree", "2F4": "TwistedF4",
        }
        if head in exc_prefix and len(nums) == 1:
            return lie(exc_prefix[head], prime_power(nums[0]))
        if len(nums) == 2:
            d, qv = nums
            q = prime_power(qv)
            if head == "PSL":
                return lie("PSL", q, m=d - 1)
            if head == "PSU":
                return lie("PSU", q, m=d - 1)
            if head == "PSp":
                if d % 2:
                    raise ValueError(f"PSp dimension must be even in {label!r}")
                return lie("PSp", q, m=d // 2)
            if head == "Omega":
                if d % 2 == 0:
                    raise ValueError(f"Omega dimension must be odd in {label!r}")
                return lie("OmegaOdd", q, m=(d - 1) // 2)
            if head in ("O+", "O-"):
                if d % 2:
                    raise ValueError(f"{head} dimension must be even in {label!r}")
                fam = "OPlus" if head == "O+" else "OMinus"
                return lie(fam, q, m=d // 2)
    raise ValueError(f"cannot parse group label {label!r}")


# ---------------------------------------------------------------------------
# Orders.


def group_order(g: GroupId) -> int:
    if g.family == "Alternating":
        return factorial(g.n) // 2  # type: ignore[arg-type]
    if g.family == "Sporadic":
        return _catalog().sporadic[g.name].order  # type: ignore[index]
    if g.family == "G2Prime2":
        return 6048  # index 2 in G2(2) of order 12096
    q = g.q.q  # type: ignore[union-attr]
    m = g.m
    if g.family == "PSL":
        num = q ** (m * (m + 1) // 2)
        for i in range(2, m + 2):
            num *= q ** i - 1
        return num // gcd(m + 1, q - 1)
    if g.family == "PSU":
        num = q ** (m * (m + 1) // 2)
        for i in range(2, m + 2):
            num *= q ** i - (-1) ** i
        return num // gcd(m + 1, q + 1)
    if g.family in ("PSp", "OmegaOdd"):
        num = q ** (m * m)
        for i in range(1, m + 1):
            num *= q ** (2 * i) - 1
        return num // gcd(2, q - 1)
    if g.family in ("OPlus", "OMinus"):
        sign = 1 if g.family == "OPlus" else -1
        half = q ** m - sign
        num = q ** (m * (m - 1)) * half
        for i in range(1, m):
            num *= q ** (2 * i) - 1
        return num // gcd(4, half)
    if g.family == "G2":
        return q ** 6 * (q ** 6 - 1) * (q ** 2 - 1)
    if g.family == "F4":
        return q ** 24 * (q ** 12 - 1) * (q ** 8 - 1) * (q ** 6 - 1) * (q ** 2 - 1)
    if g.family == "E6":
        num = q ** 36
        for i in (12, 9, 8, 6, 5, 2):
            num *= q ** i - 1
        return num // gcd(3, q - 1)
    if g.family == "E7":
        num = q ** 63
        for i in (18, 14, 12, 10, 8, 6, 2):
            num *= q ** i - 1
        return num // gcd(2, q - 1)
    if g.family == "E8":
        num = q ** 120
        for i in (30, 24, 20, 18, 14, 12, 8, 2):
            num *= q ** i - 1
        return num
    if g.family == "TwistedE6":
        num = q ** 36 * (q ** 12 - 1) * (q ** 9 + 1) * (q ** 8 - 1)
        num *= (q ** 6 - 1) * (q ** 5 + 1) * (q ** 2 - 1)
        return num // gcd(3, q + 1)
    if g.family == "TriD4":
        return q ** 12 * (q ** 8 + q ** 4 + 1) * (q ** 6 - 1) * (q ** 2 - 1)
    if g.family == "Suzuki":
        return q ** 2 * (q ** 2 + 1) * (q - 1)
    if g.family == "Ree":
        return q ** 3 * (q ** 3 + 1) * (q - 1)
    if g.family == "TwistedF4":
        return q ** 12 * (q ** 6 + 1) * (q ** 4 - 1) * (q ** 3 + 1) * (q - 1)
    raise AssertionError(f"unhandled family {g.family}")


_Q_PART_EXPONENT_FIXED = {
    "G2": 6, "F4": 24, "E6": 36, "E7": 63, "E8": 120,
    "TwistedE6": 36, "TriD4": 12, "TwistedF4": 12, "Suzuki": 2, "Ree": 3,
}


def q_part_exponent(g: GroupId) -> int:
    """e with |G|_p = q^e for G of Lie type over q = p^k.

    The cyclotomic factors q^i +- 1 are coprime to p and the centre
    order divides one of them, so the p-part of the order is exactly the
    q-power prefix of the product formula.
    """
    if g.family in ("Alternating", "Sporadic", "G2Prime2"):
        raise ValueError(f"{g.family} has no q-part exponent")
    m = g.m
    if g.family in ("PSL", "PSU"):
        return m * (m + 1) // 2
    if g.family in ("PSp", "OmegaOdd"):
        return m * m
    if g.family in ("OPlus", "OMinus"):
        return m * (m - 1)
    return _Q_PART_EXPONENT_FIXED[g.family]


# ---------------------------------------------------------------------------
# Class-number bounds: k(G) <= bound, everything an exact Fraction.

_CLASSICAL_BOUND_CONSTANT = {
    "PSL": Fraction(5, 2),
    "PSU": Fraction(413, 50),
    "PSp": Fraction(76, 5),  # q-even constant, valid for both parities
    "OmegaOdd": Fraction(73, 10),
    "OPlus": Fraction(15),
    "OMinus": Fraction(15),
}

# Exceptional bounds: polynomial coefficients by descending degree.
_EXCEPTIONAL_BOUND_POLY = {
    "Suzuki": (1, 3),
    "Ree": (1, 8),
    "G2": (1, 2, 9),
    "TwistedF4": (1, 4, 17),
    "TriD4": (1, 1, 1, 1, 6),
    "F4": (1, 2, 7, 15, 31),
    "E6": (1, 1, 2, 2, 15, 21, 60),
    "TwistedE6": (1, 1, 2, 4, 18, 26, 62),
    "E7": (1, 1, 2, 7, 17, 35, 71, 103),
    "E8": (1, 1, 2, 3, 10, 16, 40, 67, 112),
}


@dataclass(frozen=True)
class ClassNumberBound:
    """An exact upper bound for the number of conjugacy classes."""

    value: Fraction
    formula: str
    exact: bool  # True when the value is the known class count itself


def class_number_bound(g: GroupId) -> ClassNumberBound:
    if g.family == "Alternating":
        raise ValueError("alternating groups are not bounded here")
    if g.family == "Sporadic":
        count = _catalog().sporadic[g.name].class_count  # type: ignore[index]
        return ClassNumberBound(Fraction(count), "exact class count", True)
    if g.family == "G2Prime2":
        # swept with the G2 bound evaluated at q = 2
        return ClassNumberBound(Fraction(17), "q^2+2q+9 at q=2", False)
    q = g.q.q  # type: ignore[union-attr]
    if g.family in _CLASSICAL_BOUND_CONSTANT:
        c = _CLASSICAL_BOUND_CONSTANT[g.family]
        return ClassNumberBound(c * q ** g.m, f"{c}*q^m", False)
    coeffs = _EXCEPTIONAL_BOUND_POLY[g.family]
    value = 0
    for c in coeffs:
        value = value * q + c
    degree = len(coeffs) - 1
    return ClassNumberBound(Fraction(value), f"degree-{degree} polynomial in q", False)


# ---------------------------------------------------------------------------
# Embedded degree data.

DATA_ENV_VAR = "CODLAB_DATA"
_DATA_FORMAT = "codlab-groups"
_DATA_VERSION = 1


@dataclass(frozen=True)
class SporadicEntry:
    label: str
    order: int
    class_count: int
    provenance: str


@dataclass(frozen=True)
class DegreeRecord:
    """Tabulated irreducible character degrees for one group.

    faithful_only marks records listing only the characters that are
    faithful on a covering group (used for 2.A9); for full records the
    degrees satisfy sum d^2 == order.
    """

    label: str
    order: int
    degrees: tuple[int, ...]
    faithful_only: bool
    provenance: str
    aliases: tuple[str, ...] = ()


@dataclass(frozen=True)
class CatalogData:
    sporadic: dict[str, SporadicEntry]
    degrees: dict[str, DegreeRecord]


def data_path() -> Path:
    override = os.environ.get(DATA_ENV_VAR)
    if override:
        return Path(override)
    return Path(str(resources.files("codlab").joinpath("data/groups_v1.jsonl")))


def _load_catalog(path: Path) -> CatalogData:
    sporadic_entries: dict[str, SporadicEntry] = {}
    degree_records: dict[str, DegreeRecord] = {}
    with open(path, encoding="utf-8") as fh:
        header = json.loads(fh.readline())
        if header.get("format") != _DATA_FORMAT or header.get("version") != _DATA_VERSION:
            raise ValueError(f"unsupported data file header {header!r}")
        for line in fh:
            line = line.strip()
            if not line:
                continue
            rec = json.loads(line)
            if rec["record"] == "sporadic":
                entry = SporadicEntry(
                    rec["label"], int(rec["order"]), int(rec["class_count"]),
                    rec["provenance"],
                )
                sporadic_entries[entry.label] = entry
            elif rec["record"] == "degrees":
                degrees = tuple(int(d) for d in rec["degrees"])
                record = DegreeRecord(
                    rec["label"], int(rec["order"]), degrees,
                    bool(rec.get("faithful_only", False)), rec["provenance"],
                    tuple(rec.get("aliases", ())),
                )
                if list(degrees) != sorted(degrees):
                    raise ValueError(f"degrees for {record.label} not sorted")
                if not record.faithful_only:
                    total = sum(d * d for d in degrees)
                    if total != record.order:
                        raise ValueError(
                            f"degree record {record.label}: sum of squares "
                            f"{total} != order {record.order}"
                        )
                for key in (record.label, *record.aliases):
                    if key in degree_records:
                        raise ValueError(f"duplicate degree record {key}")
                    degree_records[key] = record
            else:
                raise ValueError(f"unknown record type {rec['record']!r}")
    missing = set(SPORADIC_LABELS) - set(sporadic_entries)
    if missing:
        raise ValueError(f"sporadic table incomplete, missing {sorted(missing)}")
    return CatalogData(sporadic_entries, degree_records)


@lru_cache(maxsize=4)
def _catalog_cached(path_str: str) -> CatalogData:
    return _load_catalog(Path(path_str))


def _catalog() -> CatalogData:
    return _catalog_cached(str(data_path()))


def sporadic_entries() -> list[SporadicEntry]:
    cat = _catalog()
    return [cat.sporadic[label] for label in SPORADIC_LABELS]


def degree_record(label: str) -> DegreeRecord:
    cat = _catalog()
    try:
        return cat.degrees[label]
    except KeyError:
        raise KeyError(
            f"no degree record for {label!r}; available: {sorted(cat.degrees)}"
        ) from None


def simple_codegree_set(g: GroupId) -> CodegreeSet:
    """cod(G) for a simple catalog group.

    Non-trivial irreducibles of a simple group are faithful, so each
    codegree is |G| divided by the degree.
    """
    if g.family == "Alternating":
        return alt_codegree_set(g.n)  # type: ignore[arg-type]
    label = group_label(g)
    rec = degree_record(label)
    if rec.faithful_only:
        raise ValueError(f"{label} record is faithful-only, not a simple group table")
    order = group_order(g)
    if order != rec.order:
        raise ArithmeticError(
            f"order formula {order} disagrees with record {rec.order} for {label}"
        )
    values = {1}
    for d in rec.degrees:
        if d == 1:
            continue
        if order % d != 0:
            raise ArithmeticError(f"degree {d} does not divide |{label}| = {order}")
        values.add(order // d)
    return CodegreeSet(label, order, tuple(sorted(values)))


def twisted_codegree_set_2a9() -> CodegreeSet:
    """cod(2.A9) for the double cover of A9.

    Characters trivial on the centre are inflations from A9 and keep
    their A9 codegrees; faithful characters have trivial kernel and
    contribute |2.A9| / degree.
    """
    rec = degree_record("2.A9")
    if not rec.faithful_only:
        raise ValueError("2.A9 record must be faithful-only")
    a9 = alt_codegree_set(9)
    order = 2 * a9.order
    if rec.order != order:
        raise ArithmeticError(f"2.A9 record order {rec.order} != {order}")
    if sum(d * d for d in rec.degrees) != order - a9.order:
        raise ArithmeticError("faithful degrees fail sum of squares = |2.A9| - |A9|")
    values = set(a9.values)
    for d in rec.degrees:
        if order % d != 0:
            raise ArithmeticError(f"faithful degree {d} does not divide {order}")
        values.add(order // d)
    return CodegreeSet("2.A9", order, tuple(sorted(values)))
