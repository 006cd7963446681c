import io
import json
import subprocess
import sys

import pytest

from qschub.cli import run
from qschub.grobner import GWResult


def call(*argv):
    out = io.StringIO()
    status = run(list(argv), out)
    return status, out.getvalue()


def test_qschubert_single():
    assert call("qschubert", "--n", "3", "--perm", "3 2 1") == (0, "x1^2*x2 + q1*x1\n")
    assert call("qschubert", "--n", "3", "--perm", "s1*s2")[1] == "x1*x2 + q1\n"


def test_qschubert_listing():
    status, text = call("qschubert", "--n", "3")
    assert status == 0
    lines = text.splitlines()
    assert lines[0] == "1 2 3\t1"
    assert lines[-1] == "3 2 1\tx1^2*x2 + q1*x1"
    assert len(lines) == 6
    records = json.loads(call("qschubert", "--n", "2", "--format", "json")[1])
    assert records == [{"n": 2, "perm": [1, 2], "poly": "1"}, {"n": 2, "perm": [2, 1], "poly": "x1"}]


def test_schubert():
    assert call("schubert", "--n", "3", "--perm", "3 2 1")[1] == "x1^2*x2\n"
    rec = json.loads(call("schubert", "--n", "3", "--perm", "1 3 2", "--format", "json")[1])
    assert rec == {"n": 3, "perm": [1, 3, 2], "poly": "x2 + x1"}


def test_quantize_and_qmul():
    assert call("quantize", "--n", "3", "--poly", "x1^2")[1] == "x1^2 - q1\n"
    assert call("qmul", "--n", "2", "--f", "x1", "--g", "x1")[1] == "x1^2 + q1\n"


def test_nf():
    assert call("nf", "--n", "2", "--poly", "x1^3")[1] == "q1*x1\n"
    lines = call("nf", "--n", "3", "--poly", "x1*x1", "--expand")[1].splitlines()
    assert lines == ["1 2 3\tq1", "3 1 2\t1"]


def test_gw():
    args = ["gw", "--n", "2", "--u", "2 1", "--v", "2 1", "--w", "2 1", "--d", "1"]
    assert call(*args) == (0, "1\n")
    for method in ("groebner", "bruhat", "both"):
        assert call(*args, "--method", method) == (0, "1\n")
    rec = json.loads(call("gw", "--n", "3", "--u", "2 1 3", "--v", "2 1 3", "--w", "3 2 1", "--d", "1,0",
                          "--format", "json")[1])
    assert rec == {"n": 3, "u": [2, 1, 3], "v": [2, 1, 3], "w": [3, 2, 1], "d": [1, 0], "value": 1,
                   "method": "groebner"}
    assert GWResult.from_json(rec).value == 1


def test_gw_methods_agree_spot_checks():
    perms = ["1 2 3", "2 1 3", "1 3 2", "2 3 1", "3 1 2", "3 2 1"]
    for u in perms:
        for w in perms:
            for d in ("0,0", "1,0", "0,1", "1,1"):
                status, _ = call("gw", "--n", "3", "--u", u, "--v", "2 3 1", "--w", w, "--d", d, "--method", "both")
                assert status == 0


def test_gw_table():
    status, text = call("gw-table", "--n", "2", "--max-d", "1", "--nonzero")
    assert status == 0
    assert len(text.splitlines()) == 4
    status, text = call("gw-table", "--n", "2", "--max-d", "1", "--format", "tsv")
    assert text.splitlines()[0] == "u\tv\tw\td\tvalue"
    rows = json.loads(call("gw-table", "--n", "3", "--max-d", "1,1", "--format", "json")[1])
    parsed = [GWResult.from_json(r) for r in rows]
    assert [r.to_json() for r in parsed] == rows
    assert rows == json.loads(call("gw-table", "--n", "3", "--max-d", "1,1", "--format", "json", "--workers", "2")[1])


def test_dunkl():
    assert call("dunkl", "--n", "3", "--poly", "x1^2*x2 + q1*x1", "--on", "1 2 3")[1] == "[3 2 1]\n"
    assert call("dunkl", "--n", "3", "--poly", "x1", "--on", "2 1 3")[1] == "(q1)*[1 2 3] + [3 1 2]\n"
    assert call("dunkl", "--n", "3", "--poly", "x1", "--on", "2 1 3", "--classical")[1] == "[3 1 2]\n"


def test_en_dim_and_nonneg():
    assert call("en-dim", "--n", "3", "--deg", "1")[1] == "3\n"
    rec = json.loads(call("en-dim", "--n", "2", "--deg", "1", "--format", "json")[1])
    assert rec == {"n": 2, "deg": 1, "dimension": 1, "basis": ["[1 2]"]}
    assert call("nonneg", "--n", "3", "--perm", "2 1 3")[1] == "[1 2] + [1 3]\n"
    rec = json.loads(call("nonneg", "--n", "3", "--perm", "1 2 3", "--format", "json")[1])
    assert rec == {"perm": [1, 2, 3], "certificate": [["1", 1]]}


def test_verify():
    status, text = call("verify", "--n", "3")
    assert status == 0
    assert text.splitlines()[-1] == "7/7 checks passed for n=3"
    assert all(line.startswith("PASS") for line in text.splitlines()[:-1])
    assert call("verify", "--n", "1")[0] == 0
    assert call("verify", "--n", "2")[0] == 0


@pytest.mark.parametrize("argv", [
    ["qschubert", "--n", "3", "--perm", "3 3 1"],
    ["quantize", "--n", "2", "--poly", "x3"],
    ["gw", "--n", "3", "--u", "1 2 3", "--v", "1 2 3", "--w", "1 2 3", "--d", "1"],
    ["gw", "--n", "3", "--u", "1 2 3", "--v", "1 2 3", "--w", "1 2 3", "--d", "a,b"],
    ["schubert", "--n", "0"],
])
def test_usage_errors(argv, capsys):
    assert call(*argv)[0] == 2
    assert "usage" in capsys.readouterr().err


def test_argparse_errors():
    with pytest.raises(SystemExit) as exc:
        run(["frobnicate"])
    assert exc.value.code == 2


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "qschub", "qschubert", "--n", "3", "--perm", "3 1 2"],
                          capture_output=True, text=True, check=True)
    assert proc.stdout == "x1^2 - q1\n"
