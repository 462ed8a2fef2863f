import json

import pytest

from degenerate_sums import __version__, cli, common
from degenerate_sums.identities import BaseTables, brackets
from degenerate_sums.stirling import Family


SMALL = ["--alpha-max", "1", "--m-max", "2", "--n-max", "2", "--samples", "1"]


def run(capsys, *argv):
    code = cli.main(list(argv))
    out, _err = capsys.readouterr()
    return code, out


def test_table_json(capsys):
    code, out = run(capsys, "table", "--family", "s2", "--rows", "2")
    assert code == cli.EXIT_OK
    assert out == (
        '{"family": "s2", "rows": [["1"], ["0", "1"], ["0", "1 + -1*L", "1"]]}\n'
    )


def test_table_evaluated(capsys):
    code, out = run(
        capsys, "table", "--family", "eulerian", "--rows", "2", "--lambda", "0"
    )
    assert code == cli.EXIT_OK
    assert json.loads(out)["rows"] == [["1"], ["1", "0"], ["1", "1", "0"]]


def test_table_csv(capsys):
    code, out = run(capsys, "table", "--family", "s1", "--rows", "2", "--format", "csv")
    assert code == cli.EXIT_OK
    assert out == '"1"\n"0","1"\n"0","-1 + 1*L","1"\n'


@pytest.mark.parametrize(
    "argv",
    [
        ["table", "--family", "s2", "--rows", "99"],
        ["table", "--family", "s5", "--rows", "2"],
        ["table", "--family", "s2", "--rows", "2", "--lambda", "1/0"],
    ],
)
def test_table_rejects(capsys, argv):
    code, out = run(capsys, *argv)
    assert code == cli.EXIT_USAGE
    assert out == ""


@pytest.mark.parametrize(
    "argv, expected",
    [
        (["--family", "bernoulli", "--n", "1"], "(-1/2 + 1/2*L) + 1*x"),
        (["--family", "frobenius", "--n", "1", "--u", "2"], "1 + 1*x"),
        (["--family", "frobenius", "--n", "1", "--u", "1/2", "--x", "3"], "1"),
        (["--family", "eulerian-poly", "--n", "2", "--x", "1"], "2"),
        (["--family", "bernoulli", "--n", "2", "--lambda", "0", "--x", "0"], "1/6"),
        (["--family", "carlitz", "--n", "1"], "1*x"),
    ],
)
def test_eval(capsys, argv, expected):
    code, out = run(capsys, "eval", *argv)
    assert code == cli.EXIT_OK
    assert out == expected + "\n"


def test_eval_json(capsys):
    code, out = run(
        capsys, "eval", "--family", "bernoulli", "--n", "1", "--format", "json"
    )
    assert code == cli.EXIT_OK
    assert json.loads(out) == {
        "family": "bernoulli",
        "n": 1,
        "coefficients": ["-1/2 + 1/2*L", "1"],
    }


@pytest.mark.parametrize(
    "argv",
    [
        ["--family", "frobenius", "--n", "1", "--u", "1"],
        ["--family", "frobenius", "--n", "1"],
        ["--family", "bernoulli", "--n", "1", "--u", "2"],
        ["--family", "stirling", "--n", "1"],
    ],
)
def test_eval_rejects(capsys, argv):
    code, out = run(capsys, "eval", *argv)
    assert code == cli.EXIT_USAGE
    assert out == ""


def test_verify_report(capsys, tmp_path):
    path = tmp_path / "thm7.jsonl"
    code, out = run(
        capsys, "verify", "--suite", "thm7", "--seed", "1", "--report", str(path),
        *SMALL
    )
    assert code == cli.EXIT_OK
    assert out == ""
    records = [json.loads(line) for line in path.read_text().splitlines()]
    assert len(records) == 8
    assert {r["identity_id"] for r in records} == {"thm7"}
    verbatim = [r for r in records if not r["parameters"]["corrected"]]
    assert len(verbatim) == 4
    assert all(r["expected_fail"] and not r["passed"] for r in verbatim)
    assert all(r["passed"] for r in records if r["parameters"]["corrected"])


def test_verify_to_stdout(capsys):
    code, out = run(capsys, "verify", "--suite", "thm11", *SMALL)
    assert code == cli.EXIT_OK
    records = [json.loads(line) for line in out.splitlines()]
    assert len(records) == 12
    corrected = [r for r in records if r["parameters"]["corrected"]]
    assert [(r["parameters"]["m"], r["parameters"]["j"]) for r in corrected] == [
        (0, 0),
        (1, 0),
        (1, 1),
        (2, 0),
        (2, 1),
        (2, 2),
    ]


def test_verify_is_deterministic(capsys):
    argv = ["verify", "--suite", "thm5", "--seed", "3", *SMALL]
    first = run(capsys, *argv)
    second = run(capsys, *argv)
    assert first == second


def test_verify_failure(capsys, monkeypatch):
    tables = BaseTables()
    tables = tables.with_override(Family.S2_LAMBDA, 2, 1, tables.s2(2, 1) + 1)
    monkeypatch.setattr(BaseTables, "_default", tables)
    code, out = run(capsys, "verify", "--suite", "misc", *SMALL)
    assert code == cli.EXIT_FAILED
    failed = [json.loads(line) for line in out.splitlines()]
    assert any(not r["passed"] for r in failed)


@pytest.mark.parametrize(
    "argv",
    [
        ["verify", "--suite", "thm6"],
        ["verify", "--alpha-max", "5", "--m-max", "2"],
        ["verify", "--samples", "-1"],
    ],
)
def test_verify_rejects(capsys, argv):
    code, out = run(capsys, *argv)
    assert code == cli.EXIT_USAGE
    assert out == ""


def test_verify_unwritable_report(capsys, tmp_path):
    path = tmp_path / "missing" / "report.jsonl"
    argv = ["verify", "--suite", "thm11", "--report", str(path), *SMALL]
    code, _out = run(capsys, *argv)
    assert code == cli.EXIT_USAGE
    assert not path.exists()


def test_verify_list(capsys):
    code, out = run(capsys, "verify", "--list")
    assert code == cli.EXIT_OK
    lines = out.splitlines()
    assert lines[0] == "thm1\tthm1"
    assert "thm2-4\tsum_powers" in lines
    assert "gf\teulerian_egf" in lines


def test_no_command(capsys):
    assert cli.main([]) == cli.EXIT_USAGE


def test_version(capsys):
    with pytest.raises(SystemExit) as exc:
        cli.main(["--version"])
    assert exc.value.code == 0
    assert __version__ in capsys.readouterr().out


def test_debug_flag(capsys):
    code, _out = run(capsys, "table", "--family", "s2", "--rows", "1", "--debug")
    assert code == cli.EXIT_OK
    assert common.is_debug()


def test_verify_all(capsys, tmp_path):
    path = tmp_path / "all.jsonl"
    argv = ["verify", "--suite", "all", "--seed", "42", "--report", str(path), *SMALL]
    code, out = run(capsys, *argv)
    assert code == cli.EXIT_OK
    assert out == ""
    records = [json.loads(line) for line in path.read_text().splitlines()]
    ids = {r["identity_id"] for r in records}
    expected = {"thm1", "thm2", "thm7", "thm11", "bernoulli_reflection", "eulerian_egf"}
    assert expected <= ids
    assert all(r["passed"] or r.get("expected_fail") for r in records)


def test_verify_broken_computation(capsys, tmp_path, monkeypatch):
    verify = brackets.verify_thm11

    def broken(m, corrected=True, tables=None):
        if m == 1:
            raise RuntimeError("boom")
        return verify(m, corrected, tables)

    monkeypatch.setattr(brackets, "verify_thm11", broken)
    path = tmp_path / "thm11.jsonl"
    argv = ["verify", "--suite", "thm11", "--report", str(path), *SMALL]
    code, out = run(capsys, *argv)
    assert code == cli.EXIT_USAGE
    assert out == ""
    records = [json.loads(line) for line in path.read_text().splitlines()]
    assert [r["parameters"]["m"] for r in records] == [0, 0]


def test_expected_failures_stay_quiet(capsys):
    assert cli.main(["verify", "--suite", "thm7", *SMALL]) == cli.EXIT_OK
    err = capsys.readouterr().err
    assert "(expected)" not in err
    assert "0 unexpected failures, 4 expected failures" in err
