import json

import pytest

from rankdual.cli import JobSpec, build_parser, job_from_args, run


def call(capsys, *argv):
    code = run(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_verlinde_json(capsys):
    code, out, _ = call(capsys, "verlinde", "--r", "2", "--l", "1", "--g", "2", "--weights", "[]", "--variant", "sl")
    assert code == 0
    data = json.loads(out)
    assert data["value"] == "4"
    assert set(data) == {"variant", "r", "l", "g", "n", "total_weight", "value", "subset_count"}


def test_verlinde_byte_identical(capsys):
    argv = ("verlinde", "--r", "2", "--l", "3", "--g", "2", "--weights", '["2,1","2,1"]', "--variant", "twisted")
    a = call(capsys, *argv)
    b = call(capsys, *argv)
    assert a == b and json.loads(a[1])["value"] == "250"


def test_verlinde_timing_and_oracle(capsys):
    code, out, _ = call(capsys, "verlinde", "--r", "2", "--l", "1", "--g", "2", "--variant", "gl", "--oracle", "--timing")
    data = json.loads(out)
    assert code == 0 and data["value"] == "1" and data["oracle_ok"] and "elapsed_ms" in data


def test_verlinde_csv(capsys):
    code, out, _ = call(capsys, "verlinde", "--r", "2", "--l", "1", "--g", "2", "--format", "csv", "--variant", "twisted")
    lines = out.strip().splitlines()
    assert lines == ["r,l,g,n,d,dd,total_weight,variant,value", "2,1,2,0,0,0,0,twisted,9"]


@pytest.mark.parametrize("argv", [
    ("verlinde", "--r", "2", "--l", "1", "--g", "2", "--weights", "[1"),
    ("verlinde", "--r", "2", "--l", "1", "--g", "2", "--weights", '["1"]'),
    ("verlinde", "--r", "2", "--l", "1", "--g", "2", "--weights", '["3"]'),
    ("verdict", "--r", "2", "--l", "1", "--g", "1", "--d", "1"),
    ("vi", "--r", "1", "--l", "1", "--g", "0", "--d", "1", "--mu", '["1","1","1"]'),
    ("schur-eval", "--r", "2", "--l", "1", "--diagram", "1", "--subset", "1,1"),
    ("nonsense",),
])
def test_input_errors(capsys, argv):
    code, _, err = call(capsys, *argv)
    assert code == 2


def test_verdict_names_condition(capsys):
    code, _, err = call(capsys, "verdict", "--r", "2", "--l", "1", "--g", "1", "--d", "1")
    assert code == 2 and "divisible by rl" in err


def test_symmetry(capsys):
    code, out, _ = call(capsys, "symmetry", "--N", "5", "--exhaustive")
    assert code == 0 and json.loads(out)["pass"]


def test_vi_and_check(capsys):
    code, out, _ = call(capsys, "vi", "--r", "1", "--l", "1", "--g", "0", "--n", "3", "--d", "-1", "--mu", '["1","1","1"]', "--oracle")
    assert code == 0 and json.loads(out)["value"] == "1"
    code, out, _ = call(capsys, "vi-check", "--count", "5", "--seed", "3")
    assert code == 0 and json.loads(out)["failures"] == 0


def test_normalize_and_verdict(capsys):
    code, out, _ = call(capsys, "normalize", "--instance", '{"r":2,"l":3,"g":1,"d":1,"dd":1,"weights":["1"]}')
    data = json.loads(out)
    assert code == 0 and data["replay_ok"] and data["normalized"]["dd"] == 0
    code, out, _ = call(capsys, "verdict", "--r", "2", "--l", "3", "--g", "1", "--d", "1", "--dd", "1", "--weights", '["1"]')
    data = json.loads(out)
    assert code == 0 and data["equal"] and data["r_side"] == data["l_side"]


def test_schur_eval(capsys):
    code, out, _ = call(capsys, "schur-eval", "--r", "2", "--l", "1", "--diagram", "1", "--subset", "0,1")
    assert code == 0 and json.loads(out)["coeffs"] == ["1", "1"]


def test_parlin_check(capsys):
    code, out, _ = call(capsys, "parlin-check", "--exhaustive-max", "2", "--random-seeds", "5")
    assert code == 0 and out.strip().endswith("0 failed")


def test_jobspec_round_trip():
    parser = build_parser()
    for argv in (
        ["verlinde", "--r", "2", "--l", "1", "--g", "2", "--weights", '["1,1"]'],
        ["parlin-check", "--random-seeds", "4"],
        ["vi", "--r", "1", "--l", "1", "--g", "0", "--d", "-1", "--mu", '["1"]'],
    ):
        job = job_from_args(parser.parse_args(argv))
        assert JobSpec.from_json(job.to_json()) == job
