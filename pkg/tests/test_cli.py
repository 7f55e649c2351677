import json
import subprocess
import sys

import pytest

from kbs4.cli import run


def call(capsys, *argv):
    code = run(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def call_json(capsys, *argv):
    code, out, _ = call(capsys, *argv, "--json")
    doc = json.loads(out)
    assert doc["schema"] == 1
    return code, doc


def test_chartab(capsys):
    code, doc = call_json(capsys, "chartab", "4")
    assert code == 0
    assert doc["class_sizes"] == [6, 8, 3, 6, 1]
    assert len(doc["values"]) == 5
    code, out, _ = call(capsys, "chartab", "4")
    assert code == 0 and "[3,1]" in out


def test_chartab_out_of_range(capsys):
    code, _, err = call(capsys, "chartab", "9")
    assert code == 2 and "error" in err


def test_restrict(capsys):
    code, doc = call_json(capsys, "restrict", "--group", "S4", "--to", "C3", "--rep", "d3")
    assert code == 0 and doc["multiplicities"] == [1, 1, 1]


def test_verify_commands(capsys):
    assert call(capsys, "verify-rring")[0] == 0
    code, doc = call_json(capsys, "verify-theorem1")
    assert code == 0 and doc["ok"]
    assert all(r["character"] == [0] * 5 for r in doc["relations"])


def test_order(capsys):
    code, out, _ = call(capsys, "order", "--element", "phi", "--skeleton", "4")
    assert code == 0 and out.strip() == "12"
    code, doc = call_json(capsys, "order", "--element", "x", "--skeleton", "4")
    assert doc["order"] == 12


def test_einf(capsys):
    code, out, _ = call(capsys, "einf", "--degree", "4")
    assert code == 0 and out.strip() == "Z2 + Z12"
    code, doc = call_json(capsys, "einf", "--degree", "4", "--truncation", "10")
    assert [s["order"] for s in doc["summands"]] == [2, 12]
    assert doc["truncation"] == 10


def test_truncation_env(capsys, monkeypatch):
    monkeypatch.setenv("KRING_TRUNCATION", "12")
    _, doc = call_json(capsys, "einf", "--degree", "4")
    assert doc["truncation"] == 12
    _, doc = call_json(capsys, "einf", "--degree", "4", "--truncation", "8")
    assert doc["truncation"] == 8
    monkeypatch.setenv("KRING_TRUNCATION", "7")
    assert call(capsys, "einf", "--degree", "4")[0] == 2


def test_lens(capsys):
    code, doc = call_json(capsys, "lens", "--n", "4", "--skeleton", "4", "--pullback", "phi")
    assert code == 0
    assert doc["group"] == [2, 8] and doc["raw"] == [6, 4] and doc["reduced"] == [2, 2] and doc["order"] == 4
    _, out, _ = call(capsys, "lens", "--n", "3", "--skeleton", "4", "--pullback", "phi", "--raw")
    assert "3*mu + mu^2" in out


def test_cohomology_and_survive(capsys):
    _, out, _ = call(capsys, "cohomology", "--degree", "4")
    assert out.strip() == "Z2(a2^2) + Z4(a4) + Z3(b4)"
    code, doc = call_json(capsys, "survive", "--degree", "6")
    assert code == 0 and doc["dying"] == ["Z2(a3^2)"] and doc["einf_match"]
    assert call(capsys, "survive", "--degree", "6", "--truncation", "8")[0] == 2


def test_snf_file(capsys, tmp_path):
    f = tmp_path / "m.txt"
    f.write_text("2 2\n4 6\n0 4\n")
    code, doc = call_json(capsys, "snf", str(f))
    assert code == 0 and doc["d"] == [2, 8] and doc["cokernel"] == [2, 8]
    f.write_text("2 2\n4 6\n")
    assert call(capsys, "snf", str(f))[0] == 2
    assert call(capsys, "snf", str(tmp_path / "missing.txt"))[0] == 2


@pytest.mark.parametrize(
    "argv",
    [
        ["order", "--element", "1 + v", "--skeleton", "4"],
        ["order", "--element", "v +", "--skeleton", "4"],
        ["order", "--element", "v", "--skeleton", "3"],
        ["einf", "--degree", "0"],
        ["nonsense"],
        [],
    ],
)
def test_usage_errors(capsys, argv):
    try:
        code = run(argv)
    except SystemExit as exc:  # argparse rejects before dispatch
        code = exc.code
    assert code == 2


def test_verify_all(capsys):
    code, doc = call_json(capsys, "verify-all")
    assert len(doc["checks"]) >= 20
    assert {c["status"] for c in doc["checks"]} <= {"pass", "fail"}
    assert all(set(c) == {"name", "anchor", "status", "detail"} for c in doc["checks"])
    assert code == (0 if doc["summary"]["failed"] == 0 else 1)


def test_output_is_deterministic():
    cmd = [sys.executable, "-m", "kbs4", "verify-all", "--json"]
    a = subprocess.run(cmd, capture_output=True, check=False)
    b = subprocess.run(cmd, capture_output=True, check=False)
    assert a.stdout == b.stdout and a.returncode == b.returncode
    json.loads(a.stdout)


def test_snf_stdin():
    p = subprocess.run(
        [sys.executable, "-m", "kbs4", "snf", "-", "--transforms"],
        input=b"2 2\n3 3\n0 3\n", capture_output=True, check=False,
    )
    assert p.returncode == 0
    assert p.stdout.decode().startswith("d = 3 3\ncokernel = Z3 + Z3\nleft\n")
