"""codlab command line.

Subcommands: cod, min-cod, search, schur, check-subset.  Exit codes are
a stable contract: 0 success / verification PASS, 2 usage error, 3
mathematical verification failure.

All arithmetic is exact, so json and csv output carry group orders,
codegrees, ratios and witnesses as decimal strings; small structural
integers (n, m, p, k, set sizes) stay plain.  Table output additionally
shows a factored form for large values.  Output bytes are independent
of --threads.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys

from .alt_codegrees import alt_codegree_set, min_nontrivial_codegree
from .catalog import group_label, parse_group_label
from .exactnum import format_factored
from .search import (
    ExceptionRow,
    FamilySweepReport,
    SubsetCheck,
    check_subset,
    discharge_rows,
    render_rows_csv,
    run_full_verification,
    schur_a9_size_check,
    schur_degree_equation_solutions,
    sweep_family,
    sweep_sporadic,
)

DEFAULT_MAX_N = 40

_TARGETS = {
    "psl": "PSL", "psu": "PSU", "psp": "PSp", "omegaodd": "OmegaOdd",
    "oplus": "OPlus", "ominus": "OMinus", "g2": "G2", "f4": "F4",
    "e6": "E6", "e7": "E7", "e8": "E8", "twistede6": "TwistedE6",
    "2e6": "TwistedE6", "trid4": "TriD4", "3d4": "TriD4",
    "suzuki": "Suzuki", "2b2": "Suzuki", "ree": "Ree", "2g2": "Ree",
    "twistedf4": "TwistedF4", "2f4": "TwistedF4",
}


def _fail_usage(message: str) -> int:
    print(f"error: {message}", file=sys.stderr)
    return 2


def _big(v: int) -> str:
    """Decimal plus factored form for table output."""
    if v < 2:
        return str(v)
    return f"{v} = {format_factored(v)}"


def _csv_lines(header: list[str], rows: list[list[str]]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


def _emit_json(payload: dict) -> None:
    print(json.dumps(payload, indent=2))


# ---------------------------------------------------------------------------
# cod


def cmd_cod(args: argparse.Namespace) -> int:
    n = args.n
    if not 5 <= n <= args.max_n:
        return _fail_usage(f"n must be in [5, {args.max_n}], got {n}")
    cs = alt_codegree_set(n)
    if args.format == "json":
        _emit_json({
            "command": "cod",
            "group": cs.group_label,
            "n": n,
            "order": str(cs.order),
            "codegrees": [str(v) for v in cs.values],
        })
    elif args.format == "csv":
        rows = [[str(n), str(cs.order), str(v)] for v in cs.values]
        print(_csv_lines(["n", "group_order", "codegree"], rows), end="")
    else:
        print(f"cod({cs.group_label})    |{cs.group_label}| = {_big(cs.order)}")
        width = len(str(cs.values[-1]))
        for v in cs.values:
            if v == 1:
                print(f"  {v:>{width}}")
            else:
                print(f"  {v:>{width}} = {format_factored(v)}")
        print(f"{len(cs.values)} values")
    return 0


# ---------------------------------------------------------------------------
# min-cod


def cmd_min_cod(args: argparse.Namespace) -> int:
    lo, hi = args.n_lo, args.n_hi
    if not (5 <= lo < hi <= args.max_n):
        return _fail_usage(f"need 5 <= n_lo < n_hi <= {args.max_n}, got {lo} {hi}")
    rows = [(n, min_nontrivial_codegree(n)) for n in range(lo, hi + 1)]
    monotone = all(a < b for (_, a), (_, b) in zip(rows, rows[1:]))
    verdict = "PASS" if monotone else "FAIL"
    if args.format == "json":
        _emit_json({
            "command": "min-cod",
            "n_lo": lo,
            "n_hi": hi,
            "rows": [{"n": n, "min_codegree": str(a)} for n, a in rows],
            "monotone": monotone,
            "verdict": verdict,
        })
    elif args.format == "csv":
        body = [[str(n), str(a)] for n, a in rows]
        print(_csv_lines(["n", "min_codegree"], body), end="")
        print(verdict)
    else:
        width = len(str(rows[-1][1]))
        print(f"{'n':>3}  {'min codegree':>{max(width, 12)}}")
        for n, a in rows:
            print(f"{n:>3}  {a:>{max(width, 12)}} = {format_factored(a)}")
        print(f"{verdict}: minimal codegree strictly increasing on {lo}..{hi}")
    if not monotone:
        return 3
    return 0


# ---------------------------------------------------------------------------
# search


def _row_json(r: ExceptionRow) -> dict:
    return {
        "family": r.family,
        "label": r.label,
        "m": r.m,
        "p": r.p,
        "k": r.k,
        "q": None if r.q is None else str(r.q),
        "n": r.n,
        "ratio": str(r.ratio),
    }


def _check_json(c: SubsetCheck) -> dict:
    return {
        "label": c.label,
        "n": c.n,
        "verdict": c.verdict,
        "witness": None if c.witness is None else str(c.witness),
        "h_order": str(c.h_order),
        "h_cod_size": c.h_cod_size,
        "a_cod_size": c.a_cod_size,
    }


def _rows_table(rows: tuple[ExceptionRow, ...]) -> list[str]:
    if not rows:
        return ["(no surviving rows)"]
    header = ("family", "label", "m", "p", "k", "q", "n", "ratio")
    cells = [header] + [
        tuple("" if v is None else str(v)
              for v in (r.family, r.label, r.m, r.p, r.k, r.q, r.n, r.ratio))
        for r in rows
    ]
    widths = [max(len(row[i]) for row in cells) for i in range(len(header))]
    return ["  ".join(c.ljust(w) for c, w in zip(row, widths)).rstrip()
            for row in cells]


def _check_lines(checks: tuple[SubsetCheck, ...]) -> list[str]:
    out = []
    for c in checks:
        if c.verdict == "isomorphic":
            out.append(f"{c.label} vs A{c.n}: isomorphic (orders and codegree sets equal)")
        elif c.verdict == "subset_refuted":
            out.append(f"{c.label} vs A{c.n}: refuted, witness codegree {_big(c.witness)}")
        else:
            out.append(f"{c.label} vs A{c.n}: SUBSET HOLDS without isomorphism (alarm)")
    return out


def _alarm_exit(checks: tuple[SubsetCheck, ...]) -> int:
    return 3 if any(c.verdict == "subset_holds" for c in checks) else 0


def _family_table(rep: FamilySweepReport, checks: tuple[SubsetCheck, ...]) -> list[str]:
    b = rep.bounds
    lines = [f"target: {rep.family}"]
    lines.append(f"derived bounds: m_max={b.m_max} p_max={b.p_max} k_max={b.k_max}")
    if rep.box is not None:
        lines.append(f"enumerated box: {rep.box}, points examined: {rep.points_examined}")
    for note in rep.notes:
        lines.append(f"note: {note}")
    lines.extend(_rows_table(rep.rows))
    if rep.rows:
        lines.append("checks:")
        lines.extend(_check_lines(checks))
    return lines


def cmd_search(args: argparse.Namespace) -> int:
    raw = args.target.lower().replace("-", "").replace("_", "")
    threads = args.threads
    if raw == "all":
        return _search_all(args, threads)
    if raw == "sporadic":
        rows = sweep_sporadic(threads)
        checks = discharge_rows(rows, threads)
        if args.format == "json":
            _emit_json({
                "command": "search",
                "target": "sporadic",
                "rows": [_row_json(r) for r in rows],
                "checks": [_check_json(c) for c in checks],
            })
        elif args.format == "csv":
            print(render_rows_csv(rows), end="")
        else:
            print("target: sporadic (26 sporadic groups and the Tits group)")
            print("\n".join(_rows_table(rows)))
            print("checks:")
            print("\n".join(_check_lines(checks)))
        return _alarm_exit(checks)
    family = _TARGETS.get(raw)
    if family is None:
        return _fail_usage(f"unknown search target {args.target!r}")
    rep = sweep_family(family, threads)
    checks = discharge_rows(rep.rows, threads)
    if args.format == "json":
        b = rep.bounds
        _emit_json({
            "command": "search",
            "target": family,
            "bounds": {"m_max": b.m_max, "p_max": b.p_max, "k_max": b.k_max},
            "box": None if rep.box is None else list(rep.box),
            "points_examined": rep.points_examined,
            "notes": list(rep.notes),
            "rows": [_row_json(r) for r in rep.rows],
            "checks": [_check_json(c) for c in checks],
        })
    elif args.format == "csv":
        print(render_rows_csv(rep.rows), end="")
    else:
        print("\n".join(_family_table(rep, checks)))
    return _alarm_exit(checks)


def _search_all(args: argparse.Namespace, threads: int) -> int:
    rep = run_full_verification(threads=threads)
    verdict = "PASS" if rep.ok else "FAIL"
    if args.format == "json":
        _emit_json({
            "command": "search",
            "target": "all",
            "verdict": verdict,
            "monotone": {"range": list(rep.monotone_range), "ok": rep.monotone_ok},
            "golden": {"ok": rep.golden_ok, "diffs": list(rep.golden_diffs)},
            "families": [
                {
                    "family": f.family,
                    "bounds": {"m_max": f.bounds.m_max, "p_max": f.bounds.p_max,
                               "k_max": f.bounds.k_max},
                    "box": None if f.box is None else list(f.box),
                    "points_examined": f.points_examined,
                    "notes": list(f.notes),
                    "row_count": len(f.rows),
                }
                for f in rep.family_reports
            ],
            "rows": [_row_json(r) for r in rep.rows],
            "checks": [_check_json(c) for c in rep.checks],
            "schur": {
                "solutions": list(rep.schur_scan.solutions),
                "exhausted": rep.schur_scan.exhausted,
                "a9_size": rep.schur_2a9.a9_size,
                "twisted_size": rep.schur_2a9.twisted_size,
                "proper_superset": rep.schur_2a9.proper_superset,
            },
        })
    elif args.format == "csv":
        print(render_rows_csv(rep.rows), end="")
        print(verdict)
    else:
        lo, hi = rep.monotone_range
        print(f"minimal codegree strictly increasing on {lo}..{hi}: "
              f"{'PASS' if rep.monotone_ok else 'FAIL'}")
        counts = ", ".join(f"{f.family} {len(f.rows)}" for f in rep.family_reports)
        print(f"sporadic rows: {len(rep.sporadic_rows)}; family rows: {counts}")
        print(f"golden tables: {'MATCH' if rep.golden_ok else 'MISMATCH'}")
        for diff in rep.golden_diffs:
            print(f"  {diff}")
        iso = sum(1 for c in rep.checks if c.verdict == "isomorphic")
        ref = sum(1 for c in rep.checks if c.verdict == "subset_refuted")
        print(f"survivors: {len(rep.checks)} checks, {iso} isomorphic, "
              f"{ref} refuted, {len(rep.unresolved)} unresolved")
        print("\n".join(_rows_table(rep.rows)))
        print("checks:")
        print("\n".join(_check_lines(rep.checks)))
        sc = rep.schur_scan
        print(f"double-cover equations on ({sc.n_lo}, {sc.n_hi}]: solutions "
              f"{list(sc.solutions)}, exhausted: {sc.exhausted}")
        tw = rep.schur_2a9
        print(f"cod(A9) size {tw.a9_size}, cod(2.A9) size {tw.twisted_size}, "
              f"proper superset: {tw.proper_superset}")
        print(f"RESULT: {verdict}")
    return 0 if rep.ok else 3


# ---------------------------------------------------------------------------
# schur


def cmd_schur(args: argparse.Namespace) -> int:
    scan = schur_degree_equation_solutions()
    report = schur_a9_size_check()
    ok = scan.solutions == (9,) and scan.exhausted and report.ok
    verdict = "PASS" if ok else "FAIL"
    if args.format == "json":
        _emit_json({
            "command": "schur",
            "n_lo": scan.n_lo,
            "n_hi": scan.n_hi,
            "solutions": list(scan.solutions),
            "exhausted": scan.exhausted,
            "a9_size": report.a9_size,
            "twisted_size": report.twisted_size,
            "distinct_sizes": report.a9_size != report.twisted_size,
            "proper_superset": report.proper_superset,
            "new_codegrees": [str(v) for v in report.new_values],
            "verdict": verdict,
        })
    elif args.format == "csv":
        body = [[str(n)] for n in scan.solutions]
        print(_csv_lines(["solution_n"], body), end="")
        print(f"sizes,{report.a9_size},{report.twisted_size}")
        print(verdict)
    else:
        print(f"degree equations n-1 = 2^(floor((n-2)/2)-1) and "
              f"n-1 = 2^(floor(n/2)-1) on ({scan.n_lo}, {scan.n_hi}]")
        print(f"solutions: {list(scan.solutions)} (exhausted beyond range: {scan.exhausted})")
        print(f"cod(A9) size: {report.a9_size}")
        print(f"cod(2.A9) size: {report.twisted_size}")
        print(f"distinct sizes: {str(report.a9_size != report.twisted_size).lower()}")
        print(f"cod(A9) proper subset of cod(2.A9): {str(report.proper_superset).lower()}")
        print("new codegrees from faithful characters: "
              + ", ".join(_big(v) for v in report.new_values))
        print(verdict)
    return 0 if ok else 3


# ---------------------------------------------------------------------------
# check-subset


def cmd_check_subset(args: argparse.Namespace) -> int:
    try:
        g = parse_group_label(args.group)
    except ValueError as exc:
        return _fail_usage(str(exc))
    if not 5 <= args.n <= args.max_n:
        return _fail_usage(f"n must be in [5, {args.max_n}], got {args.n}")
    try:
        result = check_subset(g, args.n)
    except KeyError as exc:
        return _fail_usage(f"no degree data for {group_label(g)}: {exc}")
    if args.format == "json":
        _emit_json({"command": "check-subset", **_check_json(result)})
    elif args.format == "csv":
        body = [[result.label, str(result.n), result.verdict,
                 "" if result.witness is None else str(result.witness)]]
        print(_csv_lines(["label", "n", "verdict", "witness"], body), end="")
    else:
        print("\n".join(_check_lines((result,))))
        print(f"|{result.label}| = {_big(result.h_order)}")
        print(f"codegree set sizes: {result.h_cod_size} vs {result.a_cod_size}")
    return 3 if result.verdict == "subset_holds" else 0


# ---------------------------------------------------------------------------
# parser


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="codlab",
        description="Exact codegree computations for alternating groups "
                    "and the bounded simple-group exception search.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser) -> None:
        p.add_argument("--format", choices=("table", "json", "csv"),
                       default="table")
        p.add_argument("--threads", type=int, default=os.cpu_count() or 1,
                       help="worker threads; output bytes are identical for any value")
        p.add_argument("--max-n", type=int, default=DEFAULT_MAX_N,
                       help=f"largest accepted n (default {DEFAULT_MAX_N})")

    p_cod = sub.add_parser("cod", help="codegree set of A_n")
    p_cod.add_argument("n", type=int)
    common(p_cod)
    p_cod.set_defaults(func=cmd_cod)

    p_min = sub.add_parser("min-cod", help="minimal codegrees a_n and monotonicity")
    p_min.add_argument("n_lo", type=int)
    p_min.add_argument("n_hi", type=int)
    common(p_min)
    p_min.set_defaults(func=cmd_min_cod)

    p_search = sub.add_parser(
        "search",
        help="exception sweep for one family, 'sporadic', or 'all'",
    )
    p_search.add_argument("target")
    common(p_search)
    p_search.set_defaults(func=cmd_search)

    p_schur = sub.add_parser("schur", help="double cover of A9: equations and sizes")
    common(p_schur)
    p_schur.set_defaults(func=cmd_schur)

    p_sub = sub.add_parser("check-subset", help="test cod(H) against cod(A_n)")
    p_sub.add_argument("group")
    p_sub.add_argument("n", type=int)
    common(p_sub)
    p_sub.set_defaults(func=cmd_check_subset)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.threads < 1:
        return _fail_usage(f"--threads must be >= 1, got {args.threads}")
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
