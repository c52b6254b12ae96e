import io
import json

import pytest

from hypklein.cli import run


def call(*argv):
    out = io.StringIO()
    code = run(list(argv), out=out)
    return code, out.getvalue()


def test_solve_text():
    code, out = call("solve", "--exponents", "1/2,1/3,2/3")
    assert code == 0 and "Z = 27*X / (4*X - 1)^3" in out and "w = -27" in out


def test_classify_dihedral():
    code, out = call("classify", "--exponents", "1/2,1/2,1/7")
    assert code == 3 and "dihedral: out of scope" in out


def test_malformed_fraction(capsys):
    code, _ = call("solve", "--exponents", "1/2,1/x,1/3")
    assert code == 2
    assert "position" in capsys.readouterr().err


def test_usage_error():
    assert call("solve")[0] == 2
    assert call("frobnicate")[0] == 2


def test_verify_covering_fail_exit():
    code, out = call("verify-covering", "--exponents", "1/2,1/3,2/3", "--covering", "X")
    assert code == 1 and "FAIL" in out


def test_json_roundtrip_and_determinism():
    code, out = call("solve", "--exponents", "1/2,2/3,2/3", "--format", "json")
    assert code == 0
    again = json.dumps(json.loads(out), indent=2, sort_keys=True) + "\n"
    assert again == out
    assert call("solve", "--exponents", "1/2,2/3,2/3", "--format", "json")[1] == out


def test_identity_command():
    code, out = call("identity", "--exponents", "3/2,1/3,1/3")
    assert code == 0 and "(-7*X^2 - 42*X + 1)^(1/4)" in out and "pass" in out


def test_export_db():
    code, out = call("export-db")
    assert code == 0 and len(out.strip().splitlines()) == 56


@pytest.mark.slow
def test_verify_db():
    code, out = call("verify-db", "--order", "20")
    assert code == 0 and "all identities pass" in out
