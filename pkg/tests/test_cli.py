import json
import subprocess
import sys

import pytest

from primeaudit.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def lines_of(text):
    return [json.loads(ln) for ln in text.splitlines()]


def test_goldbach_single(capsys):
    code, out, _ = run_cli(capsys, "goldbach", "--a", "10")
    assert code == 0
    assert lines_of(out) == [{"a": 10, "n": 20, "pairs": [[3, 17], [7, 13]]}]


def test_goldbach_range_and_count_only(capsys):
    code, out, _ = run_cli(capsys, "goldbach", "--from", "2", "--to", "6", "--count-only")
    assert code == 0
    recs = lines_of(out)
    assert [r["a"] for r in recs] == [2, 3, 4, 5, 6]
    assert all(r["count"] >= 1 for r in recs)


def test_diff_subcommand(capsys):
    code, out, _ = run_cli(capsys, "diff", "--a", "3")
    assert code == 0                      # a = 3 legitimately has no representation
    assert lines_of(out) == [{"a": 3, "n": 6, "pairs": []}]
    code, out, _ = run_cli(capsys, "diff", "--from", "4", "--to", "8")
    assert code == 0
    assert all(r["pairs"] for r in lines_of(out))


def test_prp_subcommand(capsys):
    code, out, _ = run_cli(capsys, "prp", "--a", "10")
    assert code == 0
    assert lines_of(out) == [{"a": 10, "min_point": 3, "points": [3, 7]}]
    code, out, _ = run_cli(capsys, "prp", "--from", "4", "--to", "12")
    assert code == 0
    assert all(r["min_point"] is not None for r in lines_of(out))


def test_ternary_subcommand(capsys):
    code, out, _ = run_cli(capsys, "ternary", "--n", "21")
    assert code == 0
    assert lines_of(out) == [{"n": 21, "triple": [3, 5, 13]}]
    code, out, _ = run_cli(capsys, "ternary", "--from", "9", "--to", "19")
    assert code == 0
    assert [r["n"] for r in lines_of(out)] == [9, 11, 13, 15, 17, 19]
    code, _, err = run_cli(capsys, "ternary", "--n", "10")
    assert code == 2 and "odd" in err


def test_polignac_subcommand(capsys):
    code, out, _ = run_cli(capsys, "polignac", "--gap", "2", "--limit", "100")
    assert code == 0
    assert lines_of(out) == [{"gap": 2, "limit": 100, "count": 8}]
    code, out, _ = run_cli(capsys, "polignac", "--max-gap", "8", "--limit", "100")
    assert [r["gap"] for r in lines_of(out)] == [2, 4, 6, 8]


def test_vieta_subcommand(capsys):
    code, out, _ = run_cli(capsys, "vieta", "--a", "10", "--variant", "sum")
    assert code == 0
    assert lines_of(out) == [{"a": 10, "variant": "sum", "coeffs": [210, -247, 101, -17, 1]}]


def test_product_subcommand(capsys):
    code, out, _ = run_cli(capsys, "product", "--a", "10", "--variant", "sum", "--factor")
    assert code == 0
    rec = lines_of(out)[0]
    assert rec["product"] == 59670
    assert rec["exponents"] == {"2": 1, "3": 3, "5": 1}
    assert rec["a_plus_1_exponent"] == 0
    assert rec["leftover"] == 221


def test_bezout_subcommand(capsys):
    code, out, _ = run_cli(capsys, "bezout", "--a", "10", "--variant", "sum", "--kind", "quadratic")
    assert code == 0
    rec = lines_of(out)[0]
    assert (rec["u"], rec["v"], rec["c0"], rec["verified"]) == (446, 3, -59460, True)
    code, out, _ = run_cli(capsys, "bezout", "--a", "10", "--variant", "diff", "--kind", "unit")
    rec = lines_of(out)[0]
    assert rec["q_plus_c1"] == 17067 and rec["verified"]


def test_sieve_subcommand_sci_notation(capsys):
    code, out, _ = run_cli(capsys, "sieve", "--limit", "1e4")
    assert code == 0
    assert lines_of(out) == [{"limit": 10000, "count": 1229, "largest": 9973}]


def test_audit_subcommand(capsys):
    code, out, _ = run_cli(capsys, "audit", "--claims", "G-CONG", "--from", "4", "--to", "200")
    assert code == 0
    recs = out.splitlines()
    assert json.loads(recs[1])["status"] == "PASS"


def test_audit_csv_and_out_file(capsys, tmp_path):
    target = tmp_path / "report.csv"
    code, out, _ = run_cli(capsys, "audit", "--claims", "G-CONG,G-DEG", "--from", "4", "--to", "40",
                           "--format", "csv", "--out", str(target))
    assert code == 0
    assert target.read_text(encoding="utf-8") == out
    assert out.splitlines()[0] == "claim,a_lo,a_hi,status,checked,witness_count"


def test_audit_jobs_flag_changes_only_trailer(capsys):
    _, out1, _ = run_cli(capsys, "audit", "--claims", "G-DEG,G-EQUIV", "--from", "4", "--to", "64")
    _, out8, _ = run_cli(capsys, "audit", "--claims", "G-DEG,G-EQUIV", "--from", "4", "--to", "64",
                         "--jobs", "8")
    body1 = [ln for ln in out1.splitlines() if not ln.startswith('{"trailer"')]
    body8 = [ln for ln in out8.splitlines() if not ln.startswith('{"trailer"')]
    assert body1 == body8


def test_usage_errors_exit_2(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["goldbach", "--bogus"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main(["nonsense"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main(["goldbach", "--a", "ten"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main(["goldbach", "--from", "4"])       # missing --to
    assert exc.value.code == 2
    code, _, err = run_cli(capsys, "audit", "--claims", "BOGUS", "--from", "4", "--to", "9")
    assert code == 2 and "unknown claim" in err
    code, _, err = run_cli(capsys, "sieve", "--limit", "1e12")
    assert code == 2 and "exceeds" in err


def test_counterexample_exit_code(capsys, monkeypatch):
    # a ternary decomposition failure is a reportable finding (exit 1)
    import primeaudit.cli as cli
    from primeaudit.errors import NoDecompositionError

    def fake_ternary(n, ps):
        raise NoDecompositionError("none", n)

    monkeypatch.setattr(cli, "ternary_decomposition", fake_ternary)
    code, out, _ = run_cli(capsys, "ternary", "--n", "9")
    assert code == 1
    assert lines_of(out) == [{"n": 9, "triple": None}]


def test_records_round_trip_and_revalidate(capsys):
    from conftest import td_is_prime

    _, out, _ = run_cli(capsys, "goldbach", "--from", "4", "--to", "40")
    for rec in lines_of(out):
        assert rec["n"] == 2 * rec["a"]
        for p, q in rec["pairs"]:
            assert td_is_prime(p) and td_is_prime(q) and p + q == rec["n"] and p <= q
    _, out, _ = run_cli(capsys, "diff", "--from", "4", "--to", "40")
    for rec in lines_of(out):
        for p, q in rec["pairs"]:
            assert td_is_prime(p) and td_is_prime(q) and q - p == rec["n"] and p <= rec["a"]


def test_audit_fail_exits_1(capsys, monkeypatch):
    import primeaudit.cli as cli
    from primeaudit.audit import AuditReport, ClaimResult

    fake = AuditReport(
        results=[ClaimResult(claim="G-EMP", a_lo=4, a_hi=9, status="FAIL",
                             checked=6, skipped=0,
                             witnesses=[{"a": 4, "kind": "fail", "detail": {}}])],
        meta={}, elapsed_s=0.0, jobs=1)
    monkeypatch.setattr(cli, "run_suite", lambda *a, **k: fake)
    code, out, _ = run_cli(capsys, "audit", "--claims", "G-EMP", "--from", "4", "--to", "9")
    assert code == 1
    assert '"status":"FAIL"' in out


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "primeaudit", "goldbach", "--a", "10"],
        capture_output=True, text=True, check=True)
    assert json.loads(proc.stdout) == {"a": 10, "n": 20, "pairs": [[3, 17], [7, 13]]}
    proc = subprocess.run([sys.executable, "-m", "primeaudit", "--version"],
                          capture_output=True, text=True, check=True)
    assert proc.stdout.startswith("primeaudit ")
