import json
import subprocess
import sys

import pytest

from soclebranch.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, json.loads(out)


def test_dim_of_natural_module(capsys):
    assert run(capsys, "dim", "--family", "gl", "--rank", "3", "--lambda", "[1]") == (0, 3)


def test_gt_coefficient(capsys):
    assert run(capsys, "coeff", "gt", "--top", "[2]", "--bottom", "[1]", "--k", "2") == (0, 2)
    assert run(capsys, "coeff", "gt", "--top", "[2]", "--bottom", "[1]", "--k", "inf") == (0, "inf")


def test_lr_coefficient(capsys):
    assert run(capsys, "coeff", "lr", "--outer", "[3,2,1]", "--inner1", "[2,1]", "--inner2", "[2,1]") == (0, 2)


def test_named_coefficients(capsys):
    assert run(capsys, "coeff", "K", "--json", '{"family":"gl","a":2,"r":0,"p":1,"q":1}') == (0, 3)
    assert run(capsys, "coeff", "T", "--json", '{"a":2,"lambda":[1],"mu":[1],"r":0}') == (0, 3)
    assert run(capsys, "coeff", "tildeC", "--json", '{"a":"inf","lambda":[1],"mu":[1]}') == (0, 1)
    code, table = run(capsys, "coeff", "spInGl", "--json", '{"lambda":[1],"mu":[1]}')
    assert code == 0 and table == [{"label": [2], "mult": 1}, {"label": [1, 1], "mult": 1}]


def test_branch_identity_spec(capsys):
    code, out = run(capsys, "branch", "--spec", '{"ambient":"gl","sub":"gl"}', "--module", '{"family":"gl","lambda":[2],"mu":[1]}')
    assert code == 0
    assert out == {"layers": [[{"module": {"family": "gl", "lambda": [2], "mu": [1]}, "mult": 1}]]}


def test_branch_reads_spec_file_and_truncates(capsys, tmp_path):
    spec = tmp_path / "spec.json"
    spec.write_text(json.dumps({"ambient": "gl", "sub": "gl", "b": 2}))
    code, out = run(capsys, "branch", "--spec", str(spec), "--module", '{"family":"gl","lambda":[2]}', "--max-layers", "2")
    assert code == 0 and len(out["layers"]) == 2


def test_branch_infinite_parameter(capsys):
    code, out = run(capsys, "branch", "--spec", '{"b":"inf"}', "--module", '{"family":"gl","lambda":[1]}')
    assert out["layers"][1] == [{"module": {"family": "gl", "lambda": [], "mu": []}, "mult": "inf"}]


def test_invalid_spec_exit_code(capsys):
    code, out = run(capsys, "branch", "--spec", '{"sub":"sp","l":1}', "--module", '{"family":"gl"}')
    assert code == 1 and out["code"] == "invalid-spec"


def test_malformed_json_exit_code(capsys):
    code, out = run(capsys, "branch", "--spec", '{"sub":', "--module", '{"family":"gl"}')
    assert code == 2 and out["code"] == "usage"


def test_oracle_bound_exit_code(capsys):
    code, out = run(capsys, "oracle", "char", "--family", "gl", "--rank", "40", "--lambda", "[9,9,9]")
    assert code == 1 and out["code"] == "oracle-too-large"


def test_unknown_flag_is_a_usage_error(capsys):
    with pytest.raises(SystemExit) as info:
        main(["dim", "--family", "gl", "--rank", "3", "--colour", "red"])
    assert info.value.code == 2


def test_verify_suites(capsys):
    code, out = run(capsys, "verify", "identity", "--pq", "4")
    assert code == 0 and out["passed"]
    code, out = run(capsys, "verify", "lr", "--size", "6")
    assert code == 0 and out["passed"]
    code, out = run(capsys, "verify", "nope")
    assert code == 2


def test_verify_reports_counterexamples(capsys):
    code, out = run(capsys, "verify", "oracle-typeII")
    assert code == 1 and not out["passed"]
    assert {"module" in f for f in out["failures"]} == {True}


def test_oracle_restrict_and_tensor(capsys):
    code, out = run(capsys, "oracle", "restrict", "--family", "gl", "--rank", "3", "--lambda", "[1,1]", "--target", "so")
    assert out == [{"weight": {"lambda": [1]}, "mult": 1}]
    code, out = run(capsys, "oracle", "restrict", "--family", "gl", "--rank", "2", "--lambda", "[1]", "--signature", "1,0,1", "--small-rank", "1")
    assert out == [{"weight": {"lambda": [1], "mu": []}, "mult": 1}, {"weight": {"lambda": [], "mu": []}, "mult": 1}]
    code, out = run(capsys, "oracle", "tensor", "--family", "gl", "--rank", "2", "--lambda", "[1]", "--lambda2", "[1]")
    assert [r["weight"]["lambda"] for r in out] == [[2], [1, 1]]


def test_tables(capsys):
    code, rows = run(capsys, "tables", "--type", "I", "--ambient", "gl", "--size", "0")
    assert code == 0 and len(rows) == 1 and rows[0]["module"] == {"family": "gl", "lambda": [], "mu": []}
    code, rows = run(capsys, "tables", "--type", "III", "--ambient", "gl", "--sub", "sp", "--size", "2")
    adjoint = [r for r in rows if r["module"] == {"family": "gl", "lambda": [1], "mu": [1]}]
    assert adjoint[0]["layers"] == [[{"module": {"family": "sp", "lambda": [2]}, "mult": 1}, {"module": {"family": "sp", "lambda": [1, 1]}, "mult": 1}]]


def test_type_i_table_rows_match_library(capsys):
    from soclebranch import branching as br
    from soclebranch import verify

    code, rows = run(capsys, "tables", "--type", "I", "--ambient", "gl", "--size", "2", "--b", "1", "--d", "1")
    expected = [br.layers_type_i(m, b=1, d=1).to_json()["layers"] for m in verify.gl_modules(2)]
    assert [r["layers"] for r in rows] == expected


def test_output_is_byte_identical_across_runs():
    argv = [sys.executable, "-m", "soclebranch", "tables", "--type", "II", "--ambient", "gl", "--size", "2"]
    first = subprocess.run(argv, capture_output=True, check=True).stdout
    second = subprocess.run(argv, capture_output=True, check=True).stdout
    assert first == second and first
