import csv
import io
import json
import subprocess
import sys

import jsonschema
import pytest

from qtype.cli import main
from qtype.decomp import AlgebraDecomposition

LABEL = {
    "oneOf": [
        {"type": "array", "items": {"type": "integer", "minimum": 0}},
        {"type": "object", "properties": {"k": {"type": "integer"}}, "required": ["k"]},
        {"type": "object", "properties": {"component": {"type": "integer"}}, "required": ["component"]},
    ]
}
SCHEMA = {
    "type": "object",
    "required": ["kind", "d", "boundedoperators_summand", "blocks"],
    "properties": {
        "kind": {"enum": ["unordered", "cycle", "words", "subgroup"]},
        "n": {"type": "integer", "minimum": 1},
        "d": {"type": "integer", "minimum": 1},
        "truncated_at": {"type": "integer", "minimum": 2},
        "boundedoperators_summand": {"type": "boolean"},
        "blocks": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["dim", "label"],
                "properties": {"dim": {"type": "integer", "minimum": 1}, "label": LABEL},
            },
        },
    },
}

CASES = [
    ["decompose", "unordered", "--n", "2", "--d", "2"],
    ["decompose", "unordered", "--n", "4", "--d", "3"],
    ["decompose", "cycle", "--n", "3", "--d", "2"],
    ["decompose", "cycle", "--n", "6", "--d", "1"],
    ["decompose", "words", "--d", "2", "--max-n", "4"],
    ["decompose", "subgroup", "--n", "3", "--d", "2", "--generators", "(1 2 3)"],
    ["decompose", "subgroup", "--n", "4", "--d", "2", "--generators", "(1 2 3 4); (1 3)"],
]


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_unordered_pair_of_qubits(capsys):
    code, out, _ = run(capsys, "decompose", "unordered", "--n", "2", "--d", "2")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "M_3 ⊕ M_1"
    assert lines[1].split() == ["(2)", "M_3"]
    assert lines[2].split() == ["(1,1)", "M_1"]


def test_cycle_and_subgroup_agree(capsys):
    _, out_cycle, _ = run(capsys, "decompose", "cycle", "--n", "3", "--d", "2")
    _, out_sub, _ = run(capsys, "decompose", "subgroup", "--n", "3", "--d", "2", "--generators", "(1 2 3)")
    assert out_cycle.splitlines()[0] == out_sub.splitlines()[0] == "M_4 ⊕ M_2 ⊕ M_2"


def test_one_line_generators(capsys):
    _, out, _ = run(capsys, "decompose", "subgroup", "--n", "3", "--d", "2", "--generators", "2 3 1", "--ascii")
    assert out.splitlines()[0] == "M_4 (+) M_2 (+) M_2"


def test_repeated_generator_flags(capsys):
    _, out, _ = run(
        capsys, "decompose", "subgroup", "--n", "3", "--d", "2", "--generators", "(1 2)", "--generators", "(1 2 3)"
    )
    assert out.splitlines()[0] == "M_4 ⊕ M_2"


def test_words_text(capsys):
    _, out, _ = run(capsys, "decompose", "words", "--d", "2", "--max-n", "4")
    assert out.splitlines()[0] == "B(ℓ²) ⊕ M_1 ⊕ M_2 ⊕ M_3 ⊕ M_1"
    assert "truncated at 4" in out


def test_vanishing_blocks_reported_on_stderr(capsys):
    code, out, err = run(capsys, "decompose", "cycle", "--n", "4", "--d", "1")
    assert code == 0
    assert out.splitlines()[0] == "M_1"
    assert "k = [1, 2, 3]" in err


@pytest.mark.parametrize("argv", CASES, ids=lambda a: "-".join(a[1:4]))
def test_formats_agree(capsys, argv):
    _, text, _ = run(capsys, *argv)
    _, js, _ = run(capsys, *argv, "--format", "json")
    _, cs, _ = run(capsys, *argv, "--format", "csv")

    data = json.loads(js)
    jsonschema.validate(data, SCHEMA)
    rows = list(csv.DictReader(io.StringIO(cs)))
    assert list(rows[0]) == ["kind", "n", "d", "label", "dim"]

    from_text = sorted(int(t.strip().removeprefix("M_")) for t in text.splitlines()[0].split("⊕") if "M_" in t)
    from_json = sorted(b["dim"] for b in data["blocks"])
    from_csv = sorted(int(r["dim"]) for r in rows)
    assert from_text == from_json == from_csv

    # parse(emit(x)) = x
    result = AlgebraDecomposition.from_dict(data)
    assert json.loads(json.dumps(result.to_dict())) == data


def test_deterministic(capsys):
    argv = ["decompose", "subgroup", "--n", "4", "--d", "2", "--generators", "(1 2 3 4)", "--format", "json"]
    assert run(capsys, *argv) == run(capsys, *argv)


@pytest.mark.parametrize(
    "argv",
    [
        ["decompose", "unordered", "--d", "2"],
        ["decompose", "words", "--d", "2"],
        ["decompose", "subgroup", "--n", "3", "--d", "2"],
        ["decompose", "subgroup", "--n", "3", "--d", "2", "--generators", "(1 5)"],
        ["decompose", "cycle", "--n", "0", "--d", "2"],
        ["decompose", "bogus", "--n", "2", "--d", "2"],
        ["tables", "quints"],
        ["tables", "pairs", "--d-max", "1"],
        ["verify", "--suite", "nope"],
    ],
)
def test_usage_errors_exit_2(capsys, argv):
    try:
        code = main(argv)
    except SystemExit as exc:  # argparse rejects choices itself
        code = exc.code
    assert code == 2
    assert "usage" in capsys.readouterr().err


def test_cap_error_exit_3(capsys):
    code, _, err = run(capsys, "decompose", "subgroup", "--n", "5", "--d", "4", "--generators", "(1 2)", "--cap", "100")
    assert code == 3
    assert "CapExceededError" in err


def test_cap_env_var(capsys, monkeypatch):
    monkeypatch.setenv("QTYPE_CAP", "4")
    code, _, _ = run(capsys, "decompose", "subgroup", "--n", "3", "--d", "2", "--generators", "(1 2 3)")
    assert code == 3
    # an explicit flag wins over the environment
    code, _, _ = run(capsys, "decompose", "subgroup", "--n", "3", "--d", "2", "--generators", "(1 2 3)", "--cap", "8")
    assert code == 0


def test_help_shows_defaults(capsys):
    with pytest.raises(SystemExit):
        main(["decompose", "--help"])
    out = capsys.readouterr().out
    assert "default: 0" in out and "1024" in out and "QTYPE_CAP" in out


@pytest.mark.parametrize(
    "which, d, row",
    [("pairs", 2, ["M_3", "M_1"]), ("triples", 10, ["M_220", "M_330", "M_120"]), ("quads", 7, ["M_210", "M_378", "M_196", "M_210", "M_35"])],
)
def test_tables_text(capsys, which, d, row):
    code, out, _ = run(capsys, "tables", which)
    assert code == 0
    lines = out.splitlines()
    assert len(lines) == 10
    assert lines[d - 1].split() == [str(d), *row]


def test_tables_json_and_csv(capsys):
    _, js, _ = run(capsys, "tables", "quads", "--format", "json")
    data = json.loads(js)
    assert data["columns"] == [[4], [3, 1], [2, 2], [2, 1, 1], [1, 1, 1, 1]]
    assert data["rows"][0] == {"d": 2, "cells": [5, 3, 1, None, None]}
    _, cs, _ = run(capsys, "tables", "triples", "--format", "csv", "--d-max", "3")
    assert cs.splitlines() == ["d,(3),\"(2,1)\",\"(1,1,1)\"", "2,4,2,", "3,10,8,1"]


def test_verify_tables(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "tables")
    assert code == 0
    assert "(27/27)" in out


def test_verify_json(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "identities", "--format", "json")
    assert code == 0
    report = json.loads(out)
    assert report["passed"] is True
    assert all(c["passed"] and c["cases"] > 0 for c in report["checks"])


def test_verify_failure_exits_1(capsys, monkeypatch):
    import qtype.verify as verify

    monkeypatch.setitem(verify.REFERENCE_TABLES, "pairs", {2: [3, 2]})
    code, out, _ = run(capsys, "verify", "--suite", "tables")
    assert code == 1
    assert "FAIL" in out


def test_verify_limits(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "cycles", "--cycle-n-max", "3", "--cycle-d-max", "2")
    assert code == 0
    assert "(6/6)" in out


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "qtype", "decompose", "cycle", "--n", "3", "--d", "2", "--ascii"],
        capture_output=True,
        text=True,
        check=False,
    )
    assert proc.returncode == 0
    assert proc.stdout.splitlines()[0] == "M_4 (+) M_2 (+) M_2"
