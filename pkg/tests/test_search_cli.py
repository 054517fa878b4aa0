import json
import subprocess
import sys

import pytest

from ccobstruct.cli import main
from ccobstruct.search import (
    SearchSpec,
    render,
    render_csv,
    render_json,
    run_search,
    search_rows,
)


def small_spec(**overrides):
    base = dict(n_range=(7, 10), d_range=(3, 9), primes=(3, 5),
                checks=("gradable", "polarization", "arboreal", "maslov"),
                odd_d_only=True)
    base.update(overrides)
    return SearchSpec(**base)


def test_spec_validation():
    with pytest.raises(ValueError):
        small_spec(n_range=(9, 7))
    with pytest.raises(ValueError):
        small_spec(primes=(3, 4))
    with pytest.raises(ValueError):
        small_spec(primes=(2,))
    with pytest.raises(ValueError):
        small_spec(checks=("gradable", "bogus"))
    with pytest.raises(ValueError):
        small_spec(fmt="xml")


def test_columns_follow_spec_header():
    spec = small_spec()
    assert spec.columns() == [
        "n", "d", "gradable", "polarization", "arboreal", "maslov_p3", "maslov_p5"]
    assert small_spec(checks=("arboreal",)).columns() == ["n", "d", "arboreal"]


def test_rows_are_lexicographic_and_match_known_values():
    rows = search_rows(small_spec(), workers=1)
    keys = [(r["n"], r["d"]) for r in rows]
    assert keys == sorted(keys)
    by_key = {(r["n"], r["d"]): r for r in rows}
    assert by_key[(7, 3)]["arboreal"] == "NotObstructedByThisTest"
    assert by_key[(7, 5)]["arboreal"] == "Obstructed"
    assert by_key[(8, 9)]["arboreal"] == "Obstructed"
    assert by_key[(8, 9)]["gradable"] == "NotObstructedByThisTest"
    # c1 = 8 = 2 (mod 3) breaks the vanishing hypothesis, so the mod-3 test is silent
    assert by_key[(7, 3)]["maslov_p3"] == "NotObstructedByThisTest"


def test_anticanonical_sweep():
    spec = SearchSpec(n_range=(7, 14), d_range=(1, 1), anticanonical_only=True,
                      checks=("arboreal",))
    rows = search_rows(spec, workers=1)
    assert [(r["n"], r["d"]) for r in rows] == [(n, n + 1) for n in range(7, 15)]
    verdicts = {r["n"]: r["arboreal"] for r in rows}
    assert verdicts[8] == "Obstructed"
    assert verdicts[14] == "Obstructed"
    assert verdicts[7] == "NotObstructedByThisTest"
    assert verdicts[9] == "NotObstructedByThisTest"


def test_empty_check_set_gives_header_only():
    spec = small_spec(checks=())
    assert search_rows(spec, workers=1) == []
    assert run_search(spec, workers=1) == "n,d\n"


def test_deterministic_across_worker_counts():
    spec = small_spec()
    reference = run_search(spec, workers=1)
    assert run_search(spec, workers=4) == reference
    assert run_search(spec, workers=16) == reference


def test_worker_env_variable(monkeypatch):
    monkeypatch.setenv("CCOBSTRUCT_WORKERS", "2")
    spec = small_spec(n_range=(7, 8))
    assert run_search(spec) == run_search(spec, workers=1)
    monkeypatch.setenv("CCOBSTRUCT_WORKERS", "0")
    with pytest.raises(ValueError):
        search_rows(spec)


def test_formats_agree_on_content():
    spec = small_spec()
    columns = spec.columns()
    rows = search_rows(spec, workers=1)
    as_json = render_json(columns, rows)
    payload = json.loads(as_json)
    assert payload["schema"] == "ccobstruct/1"
    assert payload["columns"] == columns
    assert render_csv(payload["columns"], payload["rows"]) == render_csv(columns, rows)
    md = render(columns, rows, "md")
    assert md.count("\n") == len(rows) + 2
    for row in rows:
        assert f"| {row['n']} | {row['d']} |" in md


def run_cli(*argv, capsys=None):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_cli_analyze_json(capsys):
    code, out, _ = run_cli("analyze", "--space", "pn-complement",
                           "--n", "11", "--d", "12", "--p", "3",
                           "--format", "json", capsys=capsys)
    assert code == 0
    payload = json.loads(out)
    assert payload["schema"] == "ccobstruct/1"
    checks = {c["name"]: c for c in payload["checks"]}
    assert checks["MaslovModP(3)"]["verdict"] == "Obstructed"
    assert {"param": 3, "value": "1*h^3 (mod 3)"} in checks["MaslovModP(3)"]["witnesses"]


def test_cli_analyze_md(capsys):
    code, out, _ = run_cli("analyze", "--space", "sphere6-bundle", "--k", "23",
                           "--format", "md", capsys=capsys)
    assert code == 0
    assert "| Arboreal | Obstructed |" in out


def test_cli_analyze_exit_zero_on_obstructed_verdicts(capsys):
    code, _, _ = run_cli("analyze", "--space", "pn-complement",
                         "--n", "8", "--d", "9", capsys=capsys)
    assert code == 0


def test_cli_search_csv(capsys):
    code, out, _ = run_cli("search", "--n", "7..8", "--d", "3..5", "--odd-d",
                           "--p", "3", "--checks", "arboreal,maslov", capsys=capsys)
    assert code == 0
    lines = out.strip().split("\n")
    assert lines[0] == "n,d,arboreal,maslov_p3"
    assert lines[1] == "7,3,NotObstructedByThisTest,NotObstructedByThisTest"
    assert "7,5,Obstructed,NotObstructedByThisTest" in lines


def test_cli_search_empty_checks(capsys):
    code, out, _ = run_cli("search", "--n", "7..8", "--d", "3..4",
                           "--checks", "", capsys=capsys)
    assert code == 0
    assert out == "n,d\n"


def test_cli_kernel_check(capsys):
    code, out, _ = run_cli("kernel-check", "--max-k", "10", capsys=capsys)
    assert code == 0
    lines = out.strip().split("\n")
    assert len(lines) == 10
    assert lines[0] == "c1*c2 - c3: IN KERNEL"
    assert lines[9] == "c1*c20 - c21: IN KERNEL"
    assert all(line.endswith("IN KERNEL") for line in lines)


def test_cli_sphere6(capsys):
    code, out, _ = run_cli("sphere6", "--k", "23", capsys=capsys)
    assert code == 0
    assert json.loads(out)["c3_pairing"] == 48


def test_cli_facts(capsys):
    code, out, _ = run_cli("facts", "pi", "--group", "U/O", "--k", "1..5", capsys=capsys)
    assert code == 0
    assert "| 1 | Z |" in out
    code, out, _ = run_cli("facts", "binom", "--n", "15", "--k", "5",
                           "--mod", "5", capsys=capsys)
    assert code == 0
    payload = json.loads(out)
    assert payload["exact"] == "3003" and payload["residue"] == 3


def test_cli_usage_errors(capsys):
    assert run_cli("search", "--n", "7..8", capsys=capsys)[0] == 1      # missing --d
    assert run_cli("search", "--n", "oops", "--d", "1..2", capsys=capsys)[0] == 1
    assert run_cli("analyze", "--space", "pn-complement", capsys=capsys)[0] == 1
    assert run_cli("no-such-command", capsys=capsys)[0] == 1
    code, _, err = run_cli("search", "--n", "9..7", "--d", "3..5", capsys=capsys)
    assert code == 1 and "range" in err


def test_cli_domain_errors_are_usage_errors(capsys):
    code, _, err = run_cli("analyze", "--space", "pn-complement",
                           "--n", "1", "--d", "3", capsys=capsys)
    assert code == 1 and "n >= 2" in err


def test_cli_out_file(tmp_path, capsys):
    target = tmp_path / "rows.csv"
    code, out, _ = run_cli("search", "--n", "7..7", "--d", "3..3",
                           "--checks", "arboreal", "--out", str(target), capsys=capsys)
    assert code == 0 and out == ""
    assert target.read_text() == "n,d,arboreal\n7,3,NotObstructedByThisTest\n"


def test_cli_entrypoint_subprocess():
    proc = subprocess.run(
        [sys.executable, "-m", "ccobstruct.cli", "verify-paper"],
        capture_output=True, text=True, timeout=300)
    assert proc.returncode == 0
    assert "EXPECTED-DISCREPANCY" in proc.stdout
    assert "0 failed" in proc.stdout
