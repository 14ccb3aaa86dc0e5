"""Exception search: sieves, derived boxes, frozen tables, discharge.

Expected rows and witnesses were worked out by hand from the frozen
codegree sets before this module existed; the sweep must reproduce
them exactly.  Witness soundness (witness divides |H| but lies outside
cod(A_n)) is re-verified from scratch here rather than trusted.
"""

import math

import pytest
from hypothesis import given, settings, strategies as st

from codlab.alt_codegrees import alt_codegree_set
from codlab.catalog import (
    GroupId,
    group_order,
    parse_group_label,
    simple_codegree_set,
    sporadic,
)
from codlab.search import (
    candidate_n_range,
    check_subset,
    compare_with_golden,
    derive_family_bounds,
    discharge_rows,
    n_min,
    render_rows_csv,
    run_full_verification,
    schur_a9_size_check,
    schur_degree_equation_solutions,
    sweep_family,
    sweep_sporadic,
)

# (m, q, n, ratio) per family, the frozen sweep outcome
EXPECTED_PSL_ROWS = [
    (1, 4, 5, 1), (1, 4, 6, 6), (1, 8, 7, 5), (1, 9, 6, 1), (1, 9, 7, 7),
    (1, 5, 5, 1), (1, 5, 6, 6), (1, 7, 7, 15),
    (2, 4, 8, 1), (2, 4, 9, 9), (3, 2, 8, 1), (3, 2, 9, 9),
]
EXPECTED_PSU_ROWS = [(2, 3, 9, 30), (3, 2, 9, 7)]
EXPECTED_OMEGA_ROWS = [(2, 3, 9, 7)]

EXPECTED_WITNESSES = {
    ("PSL(2,4)", 6): 12,
    ("PSL(2,5)", 6): 12,
    ("PSL(2,7)", 7): 21,
    ("PSL(2,8)", 7): 56,
    ("PSL(2,9)", 7): 36,
    ("PSL(3,4)", 8): 320,
    ("PSL(3,4)", 9): 315,
    ("PSL(4,2)", 9): 288,
    ("PSU(3,3)", 9): 189,
    ("PSU(4,2)", 9): 320,
    ("Omega(5,3)", 9): 320,
    ("J2", 10): 1800,
}

ISOMORPHIC_PAIRS = {
    ("PSL(2,4)", 5), ("PSL(2,5)", 5), ("PSL(2,9)", 6), ("PSL(4,2)", 8),
}


def test_n_min():
    assert n_min(parse_group_label("PSL(3,4)")) == 6
    assert n_min(parse_group_label("Omega(5,3)")) == 8
    assert n_min(parse_group_label("E8(2)")) == 120
    assert n_min(parse_group_label("2B2(8)")) == 6
    assert n_min(sporadic("M11")) == 5
    assert n_min(GroupId("G2Prime2")) == 5


@pytest.mark.parametrize(
    "label,expected",
    [
        ("PSL(2,7)", [7]),
        ("PSL(3,4)", [8, 9]),
        ("PSL(4,2)", [8, 9]),
        ("PSU(3,3)", [9]),
        ("Omega(5,3)", [9]),
        ("J2", [10]),
        ("M11", []),
        ("G2(4)", []),  # order divides no n!/2 inside its window
    ],
)
def test_candidate_n_range(label, expected):
    assert candidate_n_range(parse_group_label(label)) == expected


def test_candidate_range_entries_divide():
    for label in ("PSL(3,4)", "J2", "Omega(5,3)"):
        g = parse_group_label(label)
        order = group_order(g)
        for n in candidate_n_range(g):
            assert (math.factorial(n) // 2) % order == 0
            assert n >= max(5, n_min(g))


def test_candidate_range_cutoff_is_tight():
    # one past the last candidate, the class-number inequality fails
    from codlab.catalog import class_number_bound

    for label in ("PSL(2,7)", "PSL(3,4)", "PSL(4,2)", "PSU(3,3)",
                  "Omega(5,3)", "J2"):
        g = parse_group_label(label)
        last = candidate_n_range(g)[-1]
        bound = class_number_bound(g).value
        lhs = math.factorial(last + 1) // 2
        assert lhs * bound.denominator >= group_order(g) * bound.numerator


def test_candidate_range_infeasible_exceptional():
    # |A_36| already exceeds |E6(2)| * bound, so the window is empty
    assert candidate_n_range(parse_group_label("E6(2)")) == []


EXPECTED_BOUNDS = {
    "PSL": (5, 7, 42),
    "PSU": (5, 3, 8),
    "PSp": (4, 2, 2),
    "OmegaOdd": (2, 3, 1),
    "OPlus": (4, 2, 1),
    "OMinus": (4, 2, 1),
    "G2": (None, 2, 2),
    "TriD4": (None, 2, 1),
    "Suzuki": (4, 2, 9),
}

EMPTY_BOUND_FAMILIES = ("F4", "E6", "E7", "E8", "TwistedE6", "Ree", "TwistedF4")


@pytest.mark.parametrize("family", sorted(EXPECTED_BOUNDS))
def test_derived_bounds(family):
    b = derive_family_bounds(family)
    assert (b.m_max, b.p_max, b.k_max) == EXPECTED_BOUNDS[family]


@pytest.mark.parametrize("family", EMPTY_BOUND_FAMILIES)
def test_infeasible_families(family):
    b = derive_family_bounds(family)
    assert b.p_max is None
    assert any("already fails" in note for note in b.notes)


def test_psl_sweep_matches_frozen_table():
    rep = sweep_family("PSL")
    got = [(r.m, r.q, r.n, r.ratio) for r in rep.rows]
    assert sorted(got) == sorted(EXPECTED_PSL_ROWS)
    assert len(rep.rows) == 12
    # floor must widen the derived box, never shrink it
    assert rep.box == (6, 17, 63)
    assert any("widened" in note for note in rep.notes)


def test_psu_and_omega_sweeps():
    psu = sweep_family("PSU")
    assert [(r.m, r.q, r.n, r.ratio) for r in psu.rows] == EXPECTED_PSU_ROWS
    om = sweep_family("OmegaOdd")
    assert [(r.m, r.q, r.n, r.ratio) for r in om.rows] == EXPECTED_OMEGA_ROWS


@pytest.mark.parametrize("family", ["PSp", "OPlus", "OMinus"])
def test_classical_families_without_rows(family):
    assert sweep_family(family).rows == ()


@pytest.mark.parametrize(
    "family",
    ["G2", "F4", "E6", "E7", "E8", "TwistedE6", "TriD4", "Suzuki", "Ree",
     "TwistedF4"],
)
def test_exceptional_sweeps_empty(family):
    rep = sweep_family(family)
    assert rep.rows == ()


def test_g2_swept_through_derived_subgroup():
    rep = sweep_family("G2")
    assert any("G2(2)'" in note and "6048" in note for note in rep.notes)


def test_suzuki_odd_power_bound():
    rep = sweep_family("Suzuki")
    assert rep.bounds.m_max == 4  # a <= 4, i.e. q = 2^3 .. 2^9
    assert any("a=5" in note for note in rep.notes)


def test_sporadic_sweep():
    rows = sweep_sporadic()
    assert len(rows) == 1
    row = rows[0]
    assert (row.label, row.n, row.ratio) == ("J2", 10, 3)


def test_check_subset_verdicts():
    for (label, n), witness in EXPECTED_WITNESSES.items():
        res = check_subset(parse_group_label(label), n)
        assert res.verdict == "subset_refuted", (label, n)
        assert res.witness == witness
    for label, n in ISOMORPHIC_PAIRS:
        res = check_subset(parse_group_label(label), n)
        assert res.verdict == "isomorphic", (label, n)
        assert res.witness is None


def test_witnesses_sound():
    # independent re-check: witness is a codegree of H missing from A_n
    for (label, n), witness in EXPECTED_WITNESSES.items():
        h_cod = set(simple_codegree_set(parse_group_label(label)).values)
        a_cod = set(alt_codegree_set(n).values)
        assert witness in h_cod
        assert witness not in a_cod
        assert witness == min(h_cod - a_cod)


def test_discharge_covers_all_rows():
    rows = sweep_family("PSL").rows + sweep_family("PSU").rows
    checks = discharge_rows(rows)
    assert len(checks) == len(rows)
    assert all(c.verdict in ("isomorphic", "subset_refuted") for c in checks)


def test_schur_equations():
    scan = schur_degree_equation_solutions()
    assert scan.solutions == (9,)
    assert scan.exhausted
    # the surviving identity: 8 = 2^(floor(9/2)-1)
    assert 9 - 1 == 2 ** (9 // 2 - 1)
    assert schur_degree_equation_solutions(10, 64).solutions == ()
    with pytest.raises(ValueError):
        schur_degree_equation_solutions(10, 9)
    with pytest.raises(ValueError):
        schur_degree_equation_solutions(7, 64)  # equations need n > 7


def test_schur_2a9_sizes():
    rep = schur_a9_size_check()
    assert (rep.a9_size, rep.twisted_size) == (16, 21)
    assert rep.proper_superset
    assert rep.new_values == (1620, 2268, 3024, 7560, 45360)
    assert rep.ok


def test_render_rows_csv_quotes_labels():
    text = render_rows_csv(sweep_family("PSU").rows)
    lines = text.splitlines()
    assert lines[0] == "family,label,m,p,k,q,n,ratio"
    assert lines[1] == 'PSU,"PSU(3,3)",2,3,1,3,9,30'


def test_threads_do_not_change_output():
    one = render_rows_csv(sweep_family("PSL", threads=1).rows)
    four = render_rows_csv(sweep_family("PSL", threads=4).rows)
    assert one == four


def test_golden_comparison_detects_drift():
    sp = sweep_sporadic()
    families = tuple(
        sweep_family(f) for f in ("PSL", "PSU", "OmegaOdd", "PSp")
    )
    ok, diffs = compare_with_golden(sp, families)
    assert ok and diffs == ()
    # drop a row: must be flagged
    import dataclasses
    clipped = dataclasses.replace(families[0], rows=families[0].rows[:-1])
    ok, diffs = compare_with_golden(sp, (clipped,) + families[1:])
    assert not ok
    assert any("table_psl.csv" in d for d in diffs)


def test_full_verification_passes():
    rep = run_full_verification(threads=2)
    assert rep.ok
    assert rep.monotone_ok
    assert rep.golden_ok
    assert len(rep.rows) == 16
    assert sum(1 for c in rep.checks if c.verdict == "isomorphic") == 4
    assert rep.unresolved == ()


@given(st.sampled_from(["PSL", "PSU", "OmegaOdd"]))
@settings(max_examples=6, deadline=None)
def test_row_arithmetic_exact(family):
    # re-assert both sieve predicates on every emitted row
    from codlab.catalog import class_number_bound

    for row in sweep_family(family).rows:
        g = parse_group_label(row.label)
        order = group_order(g)
        half = math.factorial(row.n) // 2
        assert order * row.ratio == half
        bound = class_number_bound(g).value
        assert half * bound.denominator < order * bound.numerator


def test_missing_degree_record_is_loud(tmp_path, monkeypatch):
    # strip the 2.A9 record: the double-cover check must name the gap
    from codlab.catalog import data_path
    from codlab.catalog import twisted_codegree_set_2a9

    lines = data_path().read_text("utf-8").splitlines()
    pruned = [ln for ln in lines if '"label": "2.A9"' not in ln]
    assert len(pruned) == len(lines) - 1
    target = tmp_path / "no2a9.jsonl"
    target.write_text("\n".join(pruned) + "\n", "utf-8")
    monkeypatch.setenv("CODLAB_DATA", str(target))
    with pytest.raises(KeyError, match="2.A9"):
        twisted_codegree_set_2a9()
