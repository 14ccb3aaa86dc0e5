"""Assemble src/codlab/data/groups_v1.jsonl.

Every record is validated before it is written: degree lists must pass
the sum-of-squares identity against the group order (or against
|2.A9| - |A9| for the faithful-only record), and orders are
cross-checked against the catalog's order formulas.

Sources per record:
  * sporadic orders / class counts: ATLAS of Finite Groups
  * PSL(2,q): the classical degree pattern of the q+1 / q-1 series
  * PSL(4,2): equals A8, degrees from hook lengths
  * PSL(3,4), PSU(3,3), Omega(5,3): tools/derive_degree_data.py
    (Dixon-Schneider from explicit matrix generators)
  * J2: ATLAS of Finite Groups
  * 2.A9 faithful block: spin degree formula over strict partitions
"""

import json
import math
import sys
from fractions import Fraction
from pathlib import Path

SRC = Path(__file__).resolve().parent.parent / "src"
sys.path.insert(0, str(SRC))

from codlab.alt_codegrees import alt_degree_multiset  # noqa: E402
from codlab.catalog import group_order, parse_group_label  # noqa: E402

OUT = SRC / "codlab" / "data" / "groups_v1.jsonl"

ATLAS = "ATLAS of Finite Groups"

# label -> (order, number of conjugacy classes)
SPORADIC = {
    "M11": (7920, 10),
    "M12": (95040, 15),
    "J1": (175560, 15),
    "M22": (443520, 12),
    "J2": (604800, 21),
    "M23": (10200960, 17),
    "HS": (44352000, 24),
    "J3": (50232960, 21),
    "M24": (244823040, 26),
    "McL": (898128000, 24),
    "He": (4030387200, 33),
    "Ru": (145926144000, 36),
    "Suz": (448345497600, 43),
    "ON": (460815505920, 30),
    "Co3": (495766656000, 42),
    "Co2": (42305421312000, 60),
    "Fi22": (64561751654400, 65),
    "HN": (273030912000000, 54),
    "Ly": (51765179004000000, 53),
    "Th": (90745943887872000, 48),
    "Fi23": (4089470473293004800, 98),
    "Co1": (4157776806543360000, 101),
    "J4": (86775571046077562880, 62),
    "Fi24'": (1255205709190661721292800, 108),
    "B": (4154781481226426191177580544000000, 184),
    "M": (808017424794512875886459904961710757005754368000000000, 194),
    "2F4(2)'": (17971200, 22),
}


def psl2_degrees(q: int) -> list[int]:
    """Degree multiset of PSL(2,q) from the standard series pattern."""
    if q % 2 == 0:
        degs = [1, q] + [q + 1] * ((q - 2) // 2) + [q - 1] * (q // 2)
    elif q % 4 == 1:
        degs = [1, q, (q + 1) // 2, (q + 1) // 2]
        degs += [q + 1] * ((q - 5) // 4) + [q - 1] * ((q - 1) // 4)
    else:
        degs = [1, q, (q - 1) // 2, (q - 1) // 2]
        degs += [q + 1] * ((q - 3) // 4) + [q - 1] * ((q - 3) // 4)
    return sorted(degs)


def strict_partitions(n: int, least: int = 1) -> list[tuple[int, ...]]:
    out = []
    for first in range(least, n + 1):
        rest = n - first
        if rest == 0:
            out.append((first,))
        else:
            out.extend((first,) + tail for tail in strict_partitions(rest, first + 1))
    return [tuple(sorted(p, reverse=True)) for p in out]


def spin_degrees_2an(n: int) -> list[int]:
    """Faithful irreducible degrees of the double cover of A_n.

    Each strict partition lambda with l parts carries the basic degree
    2^floor((n-l)/2) * n!/prod(lambda_i!) * prod (li-lj)/(li+lj); it
    splits into two halves when n-l is even and stays whole otherwise.
    """
    degs: list[int] = []
    for lam in strict_partitions(n):
        ell = len(lam)
        base = Fraction(math.factorial(n))
        for part in lam:
            base /= math.factorial(part)
        for i in range(ell):
            for j in range(i + 1, ell):
                base *= Fraction(lam[i] - lam[j], lam[i] + lam[j])
        base *= 2 ** ((n - ell) // 2)
        assert base.denominator == 1, lam
        d = int(base)
        if (n - ell) % 2 == 0:
            assert d % 2 == 0, lam
            degs += [d // 2, d // 2]
        else:
            degs.append(d)
    return sorted(degs)


# Dixon-Schneider outputs (tools/derive_degree_data.py), frozen here so
# rebuilding the data file does not need the multi-minute derivation.
DIXON = {
    "PSL(3,4)": [1, 20, 35, 35, 35, 45, 45, 63, 63, 64],
    "PSU(3,3)": [1, 6, 7, 7, 7, 14, 21, 21, 21, 27, 28, 28, 32, 32],
    "Omega(5,3)": [1, 5, 5, 6, 10, 10, 15, 15, 20, 24, 30, 30, 30,
                   40, 40, 45, 45, 60, 64, 81],
}

J2_DEGREES = [1, 14, 14, 21, 21, 36, 63, 70, 70, 90, 126, 160, 175,
              189, 189, 224, 224, 225, 288, 300, 336]


def degree_row(label: str, degrees: list[int], provenance: str,
               aliases: list[str] | None = None,
               faithful_only: bool = False,
               order: int | None = None) -> dict:
    if order is None:
        order = group_order(parse_group_label(label))
    total = sum(d * d for d in degrees)
    if faithful_only:
        assert total == order - order // 2, (label, total)
    else:
        assert total == order, (label, total)
    row = {
        "record": "degrees",
        "label": label,
        "order": order,
        "degrees": sorted(degrees),
        "provenance": provenance,
    }
    if aliases:
        row["aliases"] = aliases
    if faithful_only:
        row["faithful_only"] = True
    return row


def main() -> None:
    rows: list[dict] = [{"format": "codlab-groups", "version": 1}]
    for label, (order, classes) in SPORADIC.items():
        rows.append({
            "record": "sporadic",
            "label": label,
            "order": order,
            "class_count": classes,
            "provenance": ATLAS,
        })

    series = "PSL(2,q) series degree pattern; sum-of-squares checked"
    for q in (4, 5, 7, 8, 9):
        rows.append(degree_row(f"PSL(2,{q})", psl2_degrees(q), series))

    rows.append(degree_row(
        "PSL(4,2)", sorted(alt_degree_multiset(8)),
        "equal to A8; degrees from hook lengths",
    ))

    dixon = "Dixon-Schneider on matrix generators (tools/derive_degree_data.py)"
    rows.append(degree_row("PSL(3,4)", DIXON["PSL(3,4)"], dixon))
    rows.append(degree_row("PSU(3,3)", DIXON["PSU(3,3)"], dixon,
                           aliases=["G2(2)'"]))
    rows.append(degree_row("Omega(5,3)", DIXON["Omega(5,3)"], dixon,
                           aliases=["PSU(4,2)"]))

    rows.append(degree_row("J2", J2_DEGREES, ATLAS, order=604800))
    assert len(J2_DEGREES) == SPORADIC["J2"][1]

    rows.append(degree_row(
        "2.A9", spin_degrees_2an(9),
        "spin degrees over strict partitions; sum-of-squares checked",
        faithful_only=True, order=2 * math.factorial(9) // 2,
    ))

    with open(OUT, "w", encoding="utf-8") as fh:
        for row in rows:
            fh.write(json.dumps(row, separators=(", ", ": ")) + "\n")
    print(f"wrote {OUT} ({len(rows)} lines)")


if __name__ == "__main__":
    main()
