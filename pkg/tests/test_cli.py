"""Command line surface: formats, exit codes, determinism."""

import csv
import io
import json
import subprocess
import sys

import pytest

from codlab.cli import main
from codlab.catalog import data_path


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_cod_table(capsys):
    code, out, _ = run_cli(capsys, "cod", "8")
    assert code == 0
    assert "|A8| = 20160 = 2^6·3^2·5·7" in out
    assert "2880 = 2^6·3^2·5" in out
    assert "11 values" in out


def test_cod_csv_values(capsys):
    code, out, _ = run_cli(capsys, "cod", "5", "--format", "csv")
    assert code == 0
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0] == ["n", "group_order", "codegree"]
    assert [r[2] for r in rows[1:]] == ["1", "12", "15", "20"]


def test_cod_json(capsys):
    code, out, _ = run_cli(capsys, "cod", "6", "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert doc["group"] == "A6"
    assert doc["order"] == "360"
    assert doc["codegrees"] == ["1", "36", "40", "45", "72"]
    # numbers as decimal strings: reserialization is stable
    assert json.dumps(doc) == json.dumps(json.loads(json.dumps(doc)))


def test_cod_out_of_range(capsys):
    code, _, err = run_cli(capsys, "cod", "4")
    assert code == 2 and "n must be" in err
    code, _, _ = run_cli(capsys, "cod", "41")
    assert code == 2
    code, _, _ = run_cli(capsys, "cod", "41", "--max-n", "45")
    assert code == 0


def test_min_cod(capsys):
    code, out, _ = run_cli(capsys, "min-cod", "5", "6")
    assert code == 0
    assert "12" in out and "36" in out
    assert "PASS" in out


def test_min_cod_csv(capsys):
    code, out, _ = run_cli(capsys, "min-cod", "5", "7", "--format", "csv")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "n,min_codegree"
    assert lines[1:4] == ["5,12", "6,36", "7,72"]
    assert lines[-1] == "PASS"


def test_min_cod_bad_range(capsys):
    code, _, err = run_cli(capsys, "min-cod", "6", "5")
    assert code == 2 and "n_lo < n_hi" in err


def test_search_psl_csv_matches_golden(capsys):
    code, out, _ = run_cli(capsys, "search", "psl", "--format", "csv")
    assert code == 0
    golden = (data_path().parent / "golden" / "table_psl.csv").read_text("utf-8")
    assert out == golden
    assert len(out.splitlines()) == 13  # header + 12 rows


def test_search_sporadic(capsys):
    code, out, _ = run_cli(capsys, "search", "sporadic")
    assert code == 0
    assert "J2" in out and "Tits" in out
    assert "witness codegree 1800" in out


def test_search_unknown_target(capsys):
    code, _, err = run_cli(capsys, "search", "nonsense")
    assert code == 2 and "unknown search target" in err


def test_search_family_json(capsys):
    code, out, _ = run_cli(capsys, "search", "psu", "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert doc["bounds"] == {"m_max": 5, "p_max": 3, "k_max": 8}
    assert [r["label"] for r in doc["rows"]] == ["PSU(3,3)", "PSU(4,2)"]
    assert doc["rows"][0]["ratio"] == "30"
    assert [c["verdict"] for c in doc["checks"]] == ["subset_refuted"] * 2


def test_search_all_passes(capsys):
    code, out, _ = run_cli(capsys, "search", "all")
    assert code == 0
    assert "RESULT: PASS" in out
    assert "golden tables: MATCH" in out


def test_search_all_json(capsys):
    code, out, _ = run_cli(capsys, "search", "all", "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert doc["verdict"] == "PASS"
    assert doc["schur"]["solutions"] == [9]
    assert doc["schur"]["a9_size"] == 16
    assert doc["schur"]["twisted_size"] == 21
    assert len(doc["rows"]) == 16


@pytest.mark.parametrize("fmt", ["table", "json", "csv"])
def test_search_all_threads_deterministic(capsys, fmt):
    _, one, _ = run_cli(capsys, "search", "all", "--threads", "1",
                        "--format", fmt)
    _, eight, _ = run_cli(capsys, "search", "all", "--threads", "8",
                          "--format", fmt)
    assert one == eight


def test_schur(capsys):
    code, out, _ = run_cli(capsys, "schur")
    assert code == 0
    assert "solutions: [9]" in out
    assert "distinct sizes: true" in out
    assert out.rstrip().endswith("PASS")


def test_schur_json_sizes_are_integers(capsys):
    code, out, _ = run_cli(capsys, "schur", "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert doc["a9_size"] == 16 and isinstance(doc["a9_size"], int)
    assert doc["twisted_size"] == 21 and isinstance(doc["twisted_size"], int)
    assert doc["new_codegrees"] == ["1620", "2268", "3024", "7560", "45360"]


def test_check_subset_refuted(capsys):
    code, out, _ = run_cli(capsys, "check-subset", "J2", "10")
    assert code == 0
    assert "refuted" in out and "1800" in out


def test_check_subset_isomorphic(capsys):
    code, out, _ = run_cli(capsys, "check-subset", "PSL(4,2)", "8")
    assert code == 0
    assert "isomorphic" in out


def test_check_subset_json(capsys):
    code, out, _ = run_cli(capsys, "check-subset", "Omega(5,3)", "9",
                           "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert doc["verdict"] == "subset_refuted"
    assert doc["witness"] == "320"
    assert doc["h_order"] == "25920"


def test_check_subset_errors(capsys):
    code, _, err = run_cli(capsys, "check-subset", "NotAGroup(1,2)", "9")
    assert code == 2
    code, _, err = run_cli(capsys, "check-subset", "M11", "9")
    assert code == 2 and "no degree data" in err
    code, _, err = run_cli(capsys, "check-subset", "J2", "3")
    assert code == 2


def test_bad_thread_count(capsys):
    code, _, err = run_cli(capsys, "cod", "8", "--threads", "0")
    assert code == 2 and "--threads" in err


def test_usage_error_exit_code():
    with pytest.raises(SystemExit) as exc:
        main(["frobnicate"])
    assert exc.value.code == 2


def test_data_override_respected(tmp_path, monkeypatch, capsys):
    copy = tmp_path / "data.jsonl"
    copy.write_text(data_path().read_text("utf-8"), "utf-8")
    monkeypatch.setenv("CODLAB_DATA", str(copy))
    code, out, _ = run_cli(capsys, "check-subset", "PSU(3,3)", "9")
    assert code == 0 and "189" in out


def test_console_script_installed():
    proc = subprocess.run(
        [sys.executable, "-m", "codlab.cli", "cod", "5", "--format", "csv"],
        capture_output=True, text=True,
    )
    assert proc.returncode == 0
    assert proc.stdout.splitlines()[-1] == "5,60,20"
