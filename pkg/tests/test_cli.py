"""Command-line interface: grammar, outputs, exit codes, determinism."""

import json
import os
import subprocess
import sys

CLI = [sys.executable, "-m", "sympgv"]


def run_cli(*args, backend="numpy"):
    env = dict(os.environ)
    env["SYMPGV_BACKEND"] = backend
    return subprocess.run(CLI + list(args), capture_output=True, env=env)


def test_bound_text_and_exit():
    r = run_cli("bound", "--which", "cor43", "--q", "2", "--n", "10",
                "--k", "8", "--d", "2")
    assert r.returncode == 0
    assert r.stdout.decode().startswith("LHS=30 RHS=")
    assert "HOLDS=true" in r.stdout.decode()

    r = run_cli("bound", "--which", "thm34", "--q", "2", "--n", "2",
                "--k", "1", "--d", "2")
    assert r.stdout.decode().strip() == "LHS=6 RHS=15/1 HOLDS=true"


def test_bound_failing_condition_exits_zero_unless_strict():
    args = ["bound", "--which", "cor37", "--q", "2", "--n", "2",
            "--k", "1", "--d", "2"]
    r = run_cli(*args)
    assert r.returncode == 0
    assert "HOLDS=false" in r.stdout.decode()
    r = run_cli(*args, "--strict")
    assert r.returncode == 3


def test_bound_json():
    r = run_cli("bound", "--which", "primal", "--q", "2", "--n", "2",
                "--k", "1", "--d", "2", "--json")
    obj = json.loads(r.stdout)
    assert obj["lhs"] == 6
    assert obj["rhs_num"] == 15 and obj["rhs_den"] == 1
    assert obj["holds"] is True
    assert obj["context"]["condition"] == "primal"


def test_bound_validation_error_exits_one():
    r = run_cli("bound", "--which", "thm34", "--q", "2", "--n", "2",
                "--k", "3", "--d", "1")
    assert r.returncode == 1
    assert r.stderr


def test_usage_error_exits_one():
    r = run_cli("bound", "--which", "nope", "--q", "2", "--n", "2",
                "--k", "1", "--d", "1")
    assert r.returncode == 1
    r = run_cli("frobnicate")
    assert r.returncode == 1


def test_count_values():
    r = run_cli("count", "--what", "codes", "--q", "3", "--n", "2", "--k", "2")
    assert r.stdout.decode().strip() == "value=80"
    r = run_cli("count", "--what", "codes", "--q", "3", "--n", "2", "--k", "2",
                "--variant", "projective")
    assert r.stdout.decode().strip() == "value=40"
    r = run_cli("count", "--what", "dual-containing-bound", "--q", "2",
                "--n", "2", "--k", "2")
    assert r.stdout.decode().strip() == "value=14/3"
    r = run_cli("count", "--what", "sphere", "--q", "2", "--n", "2", "--d", "2")
    assert r.stdout.decode().strip() == "value=6"
    r = run_cli("count", "--what", "sphere", "--q", "2", "--n", "2")
    assert r.returncode == 1  # --d required
    r = run_cli("count", "--what", "codes", "--q", "2", "--n", "2")
    assert r.returncode == 1  # --k required


def test_enumerate_totals_and_fix_u():
    r = run_cli("enumerate", "--q", "3", "--n", "2", "--k", "2")
    assert r.returncode == 0
    assert r.stdout.decode().strip() == "total=40"

    r = run_cli("enumerate", "--q", "2", "--n", "2", "--k", "2",
                "--fix-u", "1,0|0,0")
    lines = r.stdout.decode().split()
    assert lines == ["total=15", "containing=3", "dual_containing=3"]


def test_enumerate_list_file(tmp_path):
    out = tmp_path / "codes.txt"
    r = run_cli("enumerate", "--q", "2", "--n", "1", "--k", "1",
                "--list", str(out))
    assert r.returncode == 0
    blocks = [b for b in out.read_text().split("\n\n") if b.strip()]
    assert len(blocks) == 3
    from sympgv import code_from_text
    codes = [code_from_text(b) for b in blocks]
    keys = [tuple(c.generators.ravel()) for c in codes]
    assert keys == sorted(keys)


def test_enumerate_cap_exits_two():
    r = run_cli("enumerate", "--q", "2", "--n", "3", "--k", "2",
                "--max-census", "100")
    assert r.returncode == 2
    assert r.stderr


def test_search_found_and_outputs(tmp_path):
    out = tmp_path / "w.txt"
    r = run_cli("search", "--q", "2", "--n", "10", "--k", "8", "--d", "2",
                "--mode", "dual", "--trials", "100000", "--seed", "42",
                "--out", str(out))
    assert r.returncode == 0
    text = r.stdout.decode()
    assert "found=true" in text
    assert "quantum=[[10,2," in text

    from sympgv import read_code
    code = read_code(str(out))
    assert code.k == 8 and code.is_self_orthogonal()

    r2 = run_cli("quantum", "--in", str(out), "--labels")
    assert r2.returncode == 0
    lines = r2.stdout.decode().splitlines()
    assert lines[0].startswith("[[10,2,")
    assert len(lines) == 1 + 8
    assert all(set(lbl) <= set("IXZY") and len(lbl) == 10 for lbl in lines[1:])


def test_search_exhausted_exits_three():
    r = run_cli("search", "--q", "2", "--n", "2", "--k", "1", "--d", "2",
                "--mode", "dual", "--trials", "5", "--seed", "3")
    assert r.returncode == 3
    assert "found=false" in r.stdout.decode()


def test_search_infeasible_exits_two():
    r = run_cli("search", "--q", "2", "--n", "2", "--k", "2", "--d", "3",
                "--mode", "primal", "--trials", "10", "--seed", "7")
    assert r.returncode == 2
    assert b"Singleton" in r.stderr


def test_search_json():
    r = run_cli("search", "--q", "2", "--n", "2", "--k", "1", "--d", "2",
                "--mode", "primal", "--trials", "100", "--seed", "1", "--json")
    obj = json.loads(r.stdout)
    assert obj["found"] is True
    assert obj["certified_distance"] >= 2
    assert obj["verdict"]["holds"] is True
    assert len(obj["generators"]) == 1


def test_quantum_malformed_file_exits_one(tmp_path):
    bad = tmp_path / "bad.txt"
    bad.write_text("sympcode v1\nq=2\nn=2\nk=2\n1 1 0 0\n")
    r = run_cli("quantum", "--in", str(bad))
    assert r.returncode == 1


def test_asymptotic_csv():
    r = run_cli("asymptotic", "--q", "2", "--points", "4")
    lines = r.stdout.decode().splitlines()
    assert lines[0] == "delta,rate"
    assert len(lines) == 6
    assert lines[1] == "0.000000,1.000000"
    deltas = [float(ln.split(",")[0]) for ln in lines[1:]]
    assert deltas == [0.0, 0.25, 0.5, 0.75, 1.0]


def test_asymptotic_file_and_delta0(tmp_path):
    out = tmp_path / "curve.csv"
    r = run_cli("asymptotic", "--q", "2", "--points", "10",
                "--out", str(out), "--delta0")
    assert r.returncode == 0
    assert r.stdout.decode().startswith("delta0=0.18928")
    rows = out.read_text().splitlines()
    assert rows[0] == "delta,rate" and len(rows) == 12


def test_selftest_passes():
    r = run_cli("selftest")
    assert r.returncode == 0
    text = r.stdout.decode()
    assert "FAIL" not in text
    assert text.strip().endswith("passed")


def test_byte_identical_reruns():
    commands = [
        ["search", "--q", "2", "--n", "10", "--k", "8", "--d", "2",
         "--mode", "dual", "--trials", "1000", "--seed", "42"],
        ["search", "--q", "2", "--n", "2", "--k", "1", "--d", "2",
         "--mode", "primal", "--trials", "100", "--seed", "1"],
        ["enumerate", "--q", "3", "--n", "2", "--k", "2", "--fix-u", "0,1|2,0"],
        ["asymptotic", "--q", "3", "--points", "7"],
    ]
    for cmd in commands:
        a = run_cli(*cmd)
        b = run_cli(*cmd)
        assert a.stdout == b.stdout and a.returncode == b.returncode


def test_backends_produce_identical_bytes():
    cmd = ["search", "--q", "2", "--n", "6", "--k", "4", "--d", "2",
           "--mode", "dual", "--trials", "500", "--seed", "11", "--json"]
    a = run_cli(*cmd, backend="numpy")
    b = run_cli(*cmd, backend="numba")
    assert a.stdout == b.stdout
    assert a.returncode == b.returncode
