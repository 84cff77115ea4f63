import json

import pytest

from springerbc.cli import run


def out_of(capsys):
    captured = capsys.readouterr()
    return captured.out, captured.err


def test_value_spec_example(capsys):
    code = run(
        ["value", "--theory", "exotic", "--mu", "[]", "--nu", "[1,1]", "--at", "id"]
    )
    out, _ = out_of(capsys)
    assert code == 0
    assert out == "q^4 + 2q^3 + 2q^2 + 2q + 1\n"


def test_value_sp2_and_ascending(capsys):
    code = run(["value", "--theory", "sp2", "--param", "2^2_1", "--at", "id"])
    out, _ = out_of(capsys)
    assert code == 0 and out == "2q + 1\n"
    run(
        [
            "value",
            "--theory",
            "exotic",
            "--mu",
            "[]",
            "--nu",
            "[1]",
            "--at",
            "s1",
            "--ascending",
        ]
    )
    out, _ = out_of(capsys)
    assert out == "1 - q\n"


def test_restrict_spec_example(capsys):
    code = run(["restrict", "--theory", "sp2", "--param", "2^2_1"])
    out, _ = out_of(capsys)
    assert code == 0
    assert out == "q·(2^1_1) + (1^2_0)\n"


def test_restrict_multiterm_coefficient(capsys):
    run(["restrict", "--theory", "sp2", "--param", "2^1_1 1^2_0"])
    out, _ = out_of(capsys)
    assert out == "(q^2 + q)·(2^1_1) + (1^2_0)\n"


def test_restrict_json_stable(capsys):
    argv = ["restrict", "--theory", "exotic", "--mu", "[1,1]", "--nu", "[1]",
            "--format", "json"]
    assert run(argv) == 0
    first, _ = out_of(capsys)
    assert run(argv) == 0
    second, _ = out_of(capsys)
    assert first == second
    doc = json.loads(first)
    assert doc == {
        "rank": 2,
        "terms": [
            {"param": "mu=[1,1] nu=[]", "coeff": [1, 1]},
            {"param": "mu=[1] nu=[1]", "coeff": [-1, 0, 1]},
            {"param": "mu=[] nu=[2]", "coeff": [1]},
        ],
    }


def test_restrict_q1(capsys):
    run(["restrict", "--theory", "sp2", "--param", "1^4_0", "--q1"])
    out, _ = out_of(capsys)
    assert out == "4·(1^2_0)\n"


def test_value_json_has_both_forms(capsys):
    run(
        [
            "value",
            "--theory",
            "exotic",
            "--mu",
            "[1]",
            "--nu",
            "[1]",
            "--at",
            "id",
            "--format",
            "json",
        ]
    )
    out, _ = out_of(capsys)
    doc = json.loads(out)
    assert doc == {
        "param": "mu=[1] nu=[1]",
        "at": "id",
        "coeff": [1, 2],
        "poly": "2q + 1",
    }


def test_table(capsys):
    code = run(["table", "--theory", "exotic", "--n", "1"])
    out, _ = out_of(capsys)
    assert code == 0
    assert out.splitlines() == [
        "mu=[1] nu=[]\t1\t1",
        "mu=[] nu=[1]\tq + 1\t-q + 1",
    ]


def test_iota_both_ways(capsys):
    run(["iota", "--param", "2^2_1"])
    out, _ = out_of(capsys)
    assert out == "mu=[1] nu=[1]\n"
    run(["iota", "--inverse", "--mu", "[]", "--nu", "[2]"])
    out, _ = out_of(capsys)
    assert out == "2^2_0\n"


def test_symbol(capsys):
    code = run(["symbol", "--mu", "[1]", "--nu", "[1]", "--r", "4", "--s", "2",
                "--m", "1"])
    out, _ = out_of(capsys)
    assert code == 0
    assert out == "top=[5,0]\nbottom=[3]\n"


def test_enumerate(capsys):
    run(["enumerate", "--theory", "sp2", "--n", "1"])
    out, _ = out_of(capsys)
    assert out == "2^1_1\n1^2_0\n"


def test_paving(capsys):
    run(["paving", "--param", "2^2_1"])
    out, _ = out_of(capsys)
    assert out == "lemma_hypothesis=true theorem_applies=true\n"
    run(["paving", "--param", "2^3_1", "--format", "json"])
    out, _ = out_of(capsys)
    assert json.loads(out) == {"lemma_hypothesis": False, "theorem_applies": False}


def test_equivalence(capsys):
    code = run(["equivalence", "--n", "2"])
    out, _ = out_of(capsys)
    assert code == 0
    assert all(line.endswith(": ok") for line in out.splitlines())
    assert len(out.splitlines()) == 2 + 5


def test_oracle(capsys):
    code = run(
        ["oracle", "--theory", "sp2", "--param", "2^2_1", "--q", "2",
         "--format", "json"]
    )
    out, _ = out_of(capsys)
    assert code == 0
    doc = json.loads(out)
    assert doc["pass"] is True
    assert doc["tally"] == {"2^1_1": 2, "1^2_0": 1}
    code = run(
        ["oracle", "--theory", "exotic", "--mu", "[1]", "--nu", "[1]", "--q", "3"]
    )
    out, _ = out_of(capsys)
    assert code == 0
    assert out.splitlines()[0] == "param mu=[1] nu=[1] q=3: PASS"


def test_oracle_failure_exit_code(capsys, monkeypatch):
    import springerbc.cli as cli

    monkeypatch.setattr(
        cli,
        "verify_against_formula",
        lambda param, fieldctx, jobs=1: {
            "param": "x",
            "q": 2,
            "tally": {},
            "formula": {},
            "empty_fiber": 0,
            "totals_match": False,
            "pass": False,
        },
    )
    code = run(["oracle", "--theory", "sp2", "--param", "2^2_1", "--q", "2"])
    out_of(capsys)
    assert code == 3


def test_usage_errors(capsys):
    assert run(["restrict", "--theory", "sp2"]) == 2  # missing --param
    out_of(capsys)
    assert run(["restrict", "--theory", "sp2", "--param", "3^1_1"]) == 2  # invalid
    out_of(capsys)
    assert run(["restrict", "--theory", "bogus", "--param", "2^2_1"]) == 2
    out_of(capsys)
    assert run(["frobnicate"]) == 2
    out_of(capsys)
