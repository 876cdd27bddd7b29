import json
import subprocess
import sys

import pytest

from faulhaber.cli import document_to_poly, main, run
from faulhaber.powersum import brute_force_sum


def ok(argv):
    code, doc, msg = run(argv)
    assert code == 0, msg
    return doc


@pytest.mark.parametrize("basis", ["n", "faulhaber", "cfactorial", "stirling"])
@pytest.mark.parametrize("m", range(1, 9))
def test_powersum_round_trip(basis, m):
    rs = [1] if basis in ("stirling",) or (basis == "cfactorial" and m % 2 == 0) else [1, 2, 3]
    for r in rs:
        p = document_to_poly(ok(["powersum", "--m", str(m), "--r", str(r), "--basis", basis]))
        for n in range(1, 11):
            assert p(n) == brute_force_sum(m, r, n)


def test_powersum_example():
    doc = ok(["powersum", "--m", "9", "--basis", "faulhaber"])
    assert doc["denominator"] == "5"
    assert doc["numerators"][:4] == ["16", "-20", "12", "-3"]
    assert json.loads(json.dumps(doc)) == doc


def test_coeffs():
    doc = ok(["coeffs", "--w", "4", "--k", "4"])
    assert doc["entries"] == ["1", "-4/3", "2/3", "0", "-1/30"]
    doc = ok(["coeffs", "--w", "3/2", "--k", "4", "--cross-check"])
    assert doc["agree"] is True
    for method in ("jacobi", "explicit", "determinant", "symbolic"):
        assert ok(["coeffs", "--w", "5", "--k", "3", "--method", method])["entries"][:3] == \
            ok(["coeffs", "--w", "5", "--k", "3"])["entries"][:3]


def test_decompose(tmp_path):
    table = tmp_path / "t.json"
    table.write_text(json.dumps({"lo": -5, "values": [x * x for x in range(-5, 6)]}))
    doc = ok(["decompose", "--r", "1", "--s", "1", "--values", str(table)])
    assert doc["g"]["2"] == "13/2" and doc["h"]["2"] == "-5/2"
    mapping = tmp_path / "m.json"
    mapping.write_text(json.dumps({str(x): x ** 3 for x in range(-4, 5)}))
    doc = ok(["decompose", "--r", "0", "--s", "1", "--values", str(mapping)])
    assert doc["unique"] is False and doc["h"]["0"] == "0"


def test_asymptotic():
    doc = ok(["asymptotic", "--alpha=-2", "--terms", "4", "--check", "50", "100"])
    assert doc["coefficients"][1] == "5/24"
    assert doc["check"]["within_bound"] is True
    assert ok(["asymptotic", "--alpha", "3", "--terms", "9"])["exact"] is True


def test_riddle():
    doc = ok(["riddle"])
    assert doc["name"] == "IESUS"
    assert ok(["riddle", "--c-scale", "1"])["integral"] == [False, True, False, False, False]
    assert "alt_x5" in ok(["riddle", "--alt-x5"])


def test_verify_deterministic():
    a = ok(["verify", "--suite", "riddle"])
    b = ok(["verify", "--suite", "riddle"])
    strip = lambda d: [{k: v for k, v in r.items() if k != "seconds"} for r in d["results"]]
    assert a["passed"] and strip(a) == strip(b)


@pytest.mark.parametrize("argv,code", [
    (["powersum", "--m", "x"], 1),
    (["nonsense"], 1),
    ([], 1),
    (["coeffs", "--w", "1/0", "--k", "2"], 1),
    (["powersum", "--m", "0"], 2),
    (["powersum", "--m", "4", "--r", "0", "--basis", "faulhaber"], 2),
    (["asymptotic", "--alpha=-1", "--terms", "3"], 2),
    (["decompose", "--r", "0", "--s", "1", "--values", "/nonexistent.json"], 1),
])
def test_exit_codes(argv, code):
    assert run(argv)[0] == code


def test_pretty(capsys):
    assert main(["--pretty", "powersum", "--m", "3"]) == 0
    out = capsys.readouterr().out
    assert "denominator 4" in out and not out.lstrip().startswith("{")
    assert main(["verify", "--suite", "riddle", "--pretty"]) == 0
    assert "[PASS]" in capsys.readouterr().out


def test_entry_point():
    res = subprocess.run([sys.executable, "-m", "faulhaber", "powersum", "--m", "0"],
                         capture_output=True, text=True)
    assert res.returncode == 2
    assert json.loads(res.stderr)["exit_code"] == 2
