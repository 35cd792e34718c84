import json

import pytest

from nullcorr import __version__
from nullcorr.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_invariants_json(capsys):
    code, out, _ = run_cli(
        capsys, "invariants", "--n", "2", "--c", "1", "--a", "0,0,0"
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["command"] == "invariants"
    assert payload["version"] == __version__
    assert payload["input"] == {"n": 2, "c": 1, "a": [0, 0, 0]}
    assert payload["result"]["chern"] == [0, 1, 0, 1]
    assert payload["result"]["moduli"]["dim_N"] == 14
    assert payload["result"]["stability"]["e_stable"] == "true"


def test_invariants_criterion_boundary(capsys):
    code, out, _ = run_cli(
        capsys, "invariants", "--n", "2", "--c", "3", "--a", "2,0,0"
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["result"]["stability"]["e_stable"] == "false-unknown"
    assert "moduli" not in payload["result"]  # 3 > 10 fails


def test_invariants_rejects_bad_spec(capsys):
    code, _, err = run_cli(
        capsys, "invariants", "--n", "2", "--c", "0", "--a", "0,0,0"
    )
    assert code == 2
    assert err.strip().startswith("error:")


def test_invariants_pretty(capsys):
    code, out, _ = run_cli(
        capsys, "invariants", "--n", "2", "--c", "1", "--a", "0,0,0",
        "--format", "pretty",
    )
    assert code == 0
    assert "dim_N=14" in out


def test_table_csv_row(capsys):
    code, out, _ = run_cli(
        capsys, "table", "--n", "2", "--c", "1", "--a", "0,0,0",
        "--twists", "1..1", "--format", "csv",
    )
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "t,h0,h1,h2,h3,h4,h5,chi"
    assert lines[1] == "1,14,0,0,0,0,0,14"


def test_table_json(capsys):
    code, out, _ = run_cli(
        capsys, "table", "--n", "2", "--c", "2", "--a", "0,0,0",
        "--twists=-2..-2",
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["result"]["h"][1] == [1]


def test_table_rejects_bad_range(capsys):
    code, _, err = run_cli(
        capsys, "table", "--n", "2", "--c", "1", "--a", "0,0,0",
        "--twists", "5..1",
    )
    assert code == 2
    assert "error:" in err


def test_components(capsys):
    code, out, _ = run_cli(capsys, "components", "--count", "2")
    assert code == 0
    payload = json.loads(out)
    result = payload["result"]
    assert (result["c"], result["s"], result["t"]) == (71, 4747, 23951236)
    assert result["count"] == 2
    assert result["verified_by_brute_force"] is True
    assert all("dim_N" in entry for entry in result["components"])


def test_components_ceiling_exhausted(capsys):
    code, _, err = run_cli(capsys, "components", "--count", "2", "--max-m", "10")
    assert code == 3
    assert "error:" in err


def test_components_deterministic_output(capsys):
    _, out1, _ = run_cli(capsys, "components", "--count", "1")
    _, out2, _ = run_cli(capsys, "components", "--count", "1")
    assert out1 == out2


def test_selftest_small(capsys):
    code, out, _ = run_cli(capsys, "selftest", "--grid", "small")
    assert code == 0
    payload = json.loads(out)
    checks = payload["result"]["checks"]
    assert checks and all(c["pass"] for c in checks)


def test_selftest_default_grid_is_small(capsys):
    code, out, _ = run_cli(capsys, "selftest")
    assert code == 0
    assert json.loads(out)["input"]["grid"] == "small"
