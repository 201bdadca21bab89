import json
import subprocess
import sys
from pathlib import Path

import pytest

from strange_duality.cli import EXIT_ERROR, EXIT_OK, EXIT_USAGE, main, run

GOLDEN = Path(__file__).parent / "golden"

GOLDEN_CASES = [
    ("duality check --n 4 --d 3 --json", "duality_check_n4_d3.json"),
    ("series reconstruct --dim 9 --delta 2 --q1 3 --sample 0=1 --sample 1=10 --json", "series_reconstruct_n3.json"),
    ("kring pair --c 1,0,1 --u 1,0,1 --json", "kring_pair_unit.json"),
]


@pytest.mark.parametrize("cmd, golden", GOLDEN_CASES)
def test_golden_json(cmd, golden, capsys):
    assert main(cmd.split()) == EXIT_OK
    out = capsys.readouterr().out
    assert out == (GOLDEN / golden).read_text()


@pytest.mark.parametrize("cmd, golden", GOLDEN_CASES)
def test_json_round_trip(cmd, golden, capsys):
    main(cmd.split())
    out = capsys.readouterr().out
    assert json.dumps(json.loads(out), separators=(",", ":")) + "\n" == out


def test_entry_point_subprocess():
    proc = subprocess.run(
        [sys.executable, "-m", "strange_duality", "duality", "check", "--n", "4", "--d", "3", "--json"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert proc.stdout == (GOLDEN / "duality_check_n4_d3.json").read_text()


def test_human_output(capsys):
    assert main("kring pair --c 1,0,1 --u 1,0,1".split()) == 0
    assert capsys.readouterr().out == "1\n"
    main("series reconstruct --dim 9 --delta 2 --q1 3 --sample 0=1 --sample 1=10".split())
    assert "Q coefficients [1, 0, 1, 0, 1]" in capsys.readouterr().out


def test_json_flag_position_is_free(capsys):
    main("--json duality check --n 4 --d 3".split())
    assert capsys.readouterr().out == (GOLDEN / "duality_check_n4_d3.json").read_text()


@pytest.mark.parametrize(
    "cmd, payload",
    [
        ("kring mul --c 0,1,1 --u 0,1,1", {"r": "0", "c1": "0", "chi": "1"}),
        ("kring dual --c 1,1,3", {"r": "1", "c1": "-1", "chi": "0"}),
        ("kring dim --c 2,0,-2", {"dim": "13"}),
        ("kring dim --c 2,0,4 --chern", {"dim": "13"}),
        ("kring orth --c 2,0,-1", {"u": {"r": "0", "c1": "1", "chi": "0"}, "delta": "2"}),
        ("kring chern --c 2,0,-2", {"r": "2", "c1": "0", "c2": "4"}),
        ("rep dim --partition 5,1,0", {"dim": "35"}),
        ("series coeff --n 3 --k 3", {"k": "3", "coefficient": "230"}),
        ("series coeff --numerator 1,1,7,7,22,7,7,1,1 --dim 13 --delta 2 --k 3", {"k": "3", "coefficient": "770"}),
    ],
)
def test_payloads(cmd, payload):
    res = run(cmd.split())
    assert res.exit_code == EXIT_OK
    assert res.payload == payload


def test_rep_decompositions():
    res = run("rep sym --partition 2 --n 3".split())
    assert res.payload["dim"] == "56"
    parts = {tuple(int(x) for x in p["partition"]): int(p["coefficient"]) for p in res.payload["decomposition"]}
    assert parts == {(6, 0, 0): 1, (4, 2, 0): 1, (2, 2, 2): 1}
    res = run("rep tensor --partition 4 --partition 2".split())
    assert res.payload["dim"] == "90"
    res = run("rep ext --partition 1 --n 3".split())
    assert res.payload["decomposition"] == [{"partition": ["1", "1", "1"], "coefficient": "1"}]
    res = run("rep decompose --partition 2 --n 2".split())
    assert res.payload["dim"] == "21"


def test_duality_table_and_audit():
    res = run("duality table --nmax 5".split())
    assert res.exit_code == EXIT_OK
    assert res.payload["all_asserted_agree"] is True
    assert len(res.payload["rows"]) == 18
    res = run("duality audit-alpha --n 4".split())
    assert res.exit_code == EXIT_OK
    assert res.payload["ker_dim"] == "770" and res.payload["coker_dim"] == "1925"


@pytest.mark.parametrize(
    "cmd, token",
    [
        ("kring pair --c 1,0 --u 1,0,1", "1,0"),
        ("kring mul --c 1,x,1 --u 1,0,1", "1,x,1"),
        ("frobnicate", "frobnicate"),
        ("duality check --n 4", "--d"),
        ("series reconstruct --dim 9 --delta 2 --q1 3 --sample 0:1", "0:1"),
        ("kring pair --c 1,0,1", "--u"),
    ],
)
def test_usage_errors(cmd, token):
    res = run(cmd.split())
    assert res.exit_code == EXIT_USAGE
    assert token in res.payload["error"]


@pytest.mark.parametrize(
    "cmd",
    [
        "series reconstruct --dim 9 --delta 2 --q1 3 --sample 0=1",
        "duality check --n 3 --d 4",
        "kring orth --c 0,1,0",
        "rep dim --partition 1,2,0",
    ],
)
def test_computational_errors(cmd, capsys):
    assert main(cmd.split() + ["--json"]) == EXIT_ERROR
    captured = capsys.readouterr()
    assert json.loads(captured.out)["status"] == "error"
    assert captured.err


def test_usage_exit_code_via_main(capsys):
    assert main(["kring", "pair", "--c", "1,0"]) == EXIT_USAGE
    assert "1,0" in capsys.readouterr().err


def test_large_integers_are_strings():
    res = run("kring mul --c 100000000000000000000,0,1 --u 100000000000000000000,0,1".split())
    assert res.payload["r"] == str(10**40)
