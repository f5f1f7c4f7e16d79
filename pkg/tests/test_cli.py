from __future__ import annotations

import json

import pytest

from canonbasis.cli import EXIT_FAIL, EXIT_OK, EXIT_USAGE, main
from canonbasis.verify import SWEEPS, VerificationReport


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_word(capsys):
    code, out, _ = run(capsys, "word", "--quiver", "RLRL")
    assert code == EXIT_OK
    assert out.strip() == "RLRL: 2 1 4 3 2 1 5 4 3 2 1 5 4 3 5"
    code, out, _ = run(capsys, "--json", "word", "--n", "3")
    assert [d["quiver"] for d in json.loads(out)] == ["LL", "LR", "RL", "RR"]


def test_global_flags_after_the_subcommand(capsys):
    code, out, _ = run(capsys, "word", "--json", "--quiver", "R")
    assert code == EXIT_OK and json.loads(out) == {"quiver": "R", "word": [2, 1, 2]}


def test_slices_and_maps(capsys):
    code, out, _ = run(capsys, "slices", "--quiver", "RLRL", "--json")
    assert json.loads(out)["slices"]["1,5"] == 3
    code, out, _ = run(capsys, "dmap", "--quiver", "L")
    assert out.splitlines() == ["a_1 = c_1_1", "a_2 = c_1_2 + c_2_2", "a_3 = c_1_2"]
    code, out, _ = run(capsys, "emap", "--quiver", "L", "--json")
    assert code == EXIT_OK and json.loads(out)


def test_string_and_monomial(capsys):
    code, out, _ = run(capsys, "string", "1,0,1", "--word", "1,2,1")
    assert (code, out.strip()) == (EXIT_OK, "1 1 0")
    code, out, _ = run(capsys, "monomial", "1,1,0", "--word", "1,2,1", "--json")
    assert json.loads(out) == {"c_1_1": 1, "c_1_2": 0, "c_2_2": 1}
    code, out, _ = run(capsys, "string", "1,0,1", "--quiver", "L")
    assert out.strip() == "1 1 0"


def test_cone(capsys):
    code, out, _ = run(capsys, "cone", "lpbw", "--quiver", "L")
    assert code == EXIT_OK and out.startswith("c_2_2 >= c_1_1")
    code, out, _ = run(capsys, "cone", "cpbw", "--quiver", "RLRL", "--json")
    assert len(json.loads(out)["rows"]) >= 8


def test_render(capsys):
    code, out, _ = run(capsys, "render", "slices", "--quiver", "RLRL")
    assert out.rstrip("\n") == "1 2 3 4 5\n 1 2 3 4\n  2 3 4\n   2 3\n    3"
    code, out, _ = run(capsys, "render", "triangle", "1,2,3")
    assert out == "1 3\n 2\n"
    code, out, _ = run(capsys, "render", "components", "--quiver", "RL", "--format", "svg")
    assert out.count("<svg") == 2


def test_verify_success(capsys):
    code, out, _ = run(capsys, "verify", "all", "--quiver", "RL", "--bound", "1")
    assert code == EXIT_OK and out.strip().endswith("4/4 passed")
    code, out, _ = run(capsys, "verify", "crystal", "--n", "2", "--bound", "2", "--samples", "20", "--json")
    assert code == EXIT_OK and json.loads(out)[0]["verdict"] == "pass"
    code, out, _ = run(capsys, "verify", "correspondence", "--quiver", "RLRL", "--bound", "0", "--table")
    assert code == EXIT_OK and "c_1_1 >= c_2_2" in out


def test_verify_failure_exits_one(capsys, monkeypatch):
    def broken(q, bound):
        rep = VerificationReport("coincide", q.edges, bound, points_checked=1)
        rep.fail({"check": "x", "operation": "d_map", "quiver": q.edges, "input": [0], "expected": 1, "actual": 0})
        return rep

    monkeypatch.setitem(SWEEPS, "coincide", (broken, 2))
    code, out, _ = run(capsys, "verify", "coincide", "--quiver", "R", "--json")
    assert code == EXIT_FAIL
    assert json.loads(out)[0]["failures"][0]["check"] == "x"


@pytest.mark.parametrize("argv", [
    ["word"],
    ["word", "--quiver", "LX"],
    ["word", "--quiver", "LL", "--n", "4"],
    ["slices", "--n", "3"],
    ["string", "1,2", "--quiver", "L"],
    ["string", "a,b,c", "--quiver", "L"],
    ["monomial", "1,1", "--word", "1,1,2"],
    ["render", "triangle", "1,2"],
    ["render", "slices", "--quiver", "L", "--format", "png"],
    ["verify", "coincide", "--quiver", "L", "--bound", "-1"],
    ["frobnicate"],
])
def test_usage_errors(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == EXIT_USAGE
    assert err
