from __future__ import annotations

import io
import json

import pytest

from detloccoh.cli import run


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out=out, err=err)
    return code, out.getvalue(), err.getvalue()


def test_lyubeznik_latex():
    code, out, _ = call("lyubeznik", "--m", "3", "--n", "2", "--p", "1", "--format", "latex")
    assert code == 0
    assert out.splitlines() == [
        "\\begin{pmatrix}",
        "0 & 0 & 0 & 1 & 0 \\\\",
        "0 & 0 & 0 & 0 & 0 \\\\",
        "0 & 0 & 0 & 0 & 1 \\\\",
        "0 & 0 & 0 & 0 & 0 \\\\",
        "0 & 0 & 0 & 0 & 1",
        "\\end{pmatrix}",
    ]


def test_lyubeznik_text_and_json():
    code, out, _ = call("lyubeznik", "--m", "2", "--n", "2", "--p", "1")
    assert code == 0 and out.startswith("L = q^3*w^3\n")
    code, out, _ = call("lyubeznik", "--m", "2", "--n", "2", "--p", "1", "--format", "json")
    assert json.loads(out)["table"][3] == [0, 0, 0, 1]


def test_iterate_three_entries():
    code, out, _ = call("iterate", "--m", "3", "--n", "2", "--start", "S", "--chain", "1,0")
    assert code == 0
    assert out.splitlines() == [
        "H^0_O0(H^3_O1(M)) = D0",
        "H^2_O0(H^2_O1(M)) = D0",
        "H^4_O0(H^2_O1(M)) = D0",
    ]
    code, out, _ = call("iterate", "--m", "3", "--n", "2", "--chain", "1,0", "--format", "json")
    assert len(json.loads(out)["entries"]) == 3


def test_loccoh():
    code, out, _ = call("loccoh", "--m", "4", "--n", "4", "--t", "2")
    assert code == 0
    assert out.splitlines()[1:] == ["H^4 = Q2", "H^6 = Q1", "H^8 = Q0"]
    code, out, _ = call("loccoh", "--m", "3", "--n", "2", "--t", "0", "--start", "D", "--p", "1")
    assert out.splitlines()[0] == "class: q^2*[D0] + q^4*[D0]"


def test_character_and_bott_and_quiver():
    code, out, _ = call("character", "--m", "3", "--n", "2", "--kind", "witness", "--p", "1", "--a", "1", "--d", "6")
    assert (code, out.strip()) == (0, "q + q^3")
    code, out, _ = call("character", "--m", "2", "--n", "2", "--kind", "haxd", "--a", "1", "--d", "2")
    assert out.splitlines()[0] == "q^0 * S[(2,0)]⊗S[(2,0)] (mult 1)"
    code, out, _ = call("bott", "--weight", "0,2")
    assert out.strip() == "H^1 = S(1,1)"
    code, out, _ = call("quiver", "--n", "2", "--p", "1", "--start", "D", "--format", "json")
    assert json.loads(out)["addQ"] == {"fails_at": 1}
    code, out, _ = call("quiver", "--n", "2", "--p", "0", "--start", "D", "--ext", "D:1")
    assert out.splitlines()[-1] == "dim Ext^1(D:0, D:1) = 1"


@pytest.mark.parametrize("argv", [
    ["lyubeznik", "--m", "2", "--n", "3", "--p", "1"],
    ["lyubeznik", "--m", "3"],
    ["lyubeznik", "--m", "3", "--n", "2", "--p", "2"],
    ["iterate", "--m", "3", "--n", "2", "--chain", "x"],
    ["loccoh", "--m", "3", "--n", "2", "--t", "1", "--format", "latex"],
    ["nope"],
    [],
    ["verify", "--suite", "no_such_check"],
])
def test_usage_errors_exit_1(argv):
    code, out, err = call(*argv)
    assert code == 1 and out == "" and "usage error" in err


def test_verify_all_exit_0():
    code, out, _ = call("verify", "--suite", "all", "--max", "6")
    assert code == 0
    assert out.splitlines()[-1].endswith("checks passed")


def test_verify_named_check_and_failure_code(monkeypatch):
    from detloccoh import verify
    code, out, _ = call("verify", "--suite", "qbinom_pascal")
    assert code == 0 and out.startswith("PASS qbinom_pascal")
    fake = verify.Check("always_fails", "demo", 1, lambda k: (False, "by design"), "")
    monkeypatch.setitem(verify.REGISTRY, "always_fails", fake)
    code, out, _ = call("verify", "--suite", "always_fails")
    assert code == 2 and "FAIL always_fails" in out


def test_output_is_deterministic():
    argv = ["verify", "--suite", "loccoh", "--max", "4"]
    assert call(*argv) == call(*argv)
    argv = ["character", "--m", "3", "--n", "2", "--kind", "D", "--p", "1", "--bound", "3", "--format", "json"]
    assert call(*argv) == call(*argv)
