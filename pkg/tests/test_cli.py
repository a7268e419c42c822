"""CLI surface: output formats, exit codes, determinism."""

import json

import pytest

from periodindex import cli
from periodindex.bounds import BoundReport, index_bound
from periodindex.graded import GradedAbelianGroup
from periodindex.complexes import model_homology
from periodindex.verify import CheckResult


def run(capsys, *argv):
    code = cli.main(list(argv))
    out = capsys.readouterr().out
    return code, out


def run_usage_error(capsys, *argv):
    with pytest.raises(SystemExit) as err:
        cli.main(list(argv))
    capsys.readouterr()
    return err.value.code


class TestBound:
    def test_pretty(self, capsys):
        code, out = run(capsys, "bound", "2", "3")
        assert code == 0
        assert "theorem_a = 8" in out

    def test_compare(self, capsys):
        code, out = run(capsys, "bound", "6", "4", "--compare")
        assert code == 0
        assert "theorem_a = 1296" in out
        assert "sharp = 1296" in out

    def test_trivial(self, capsys):
        code, out = run(capsys, "bound", "1", "5")
        assert "theorem_a = 1" in out

    def test_json_round_trip(self, capsys):
        code, out = run(capsys, "bound", "6", "4", "--format", "json")
        report = BoundReport.from_json_dict(json.loads(out))
        assert report == index_bound(6, 4)

    def test_csv(self, capsys):
        code, out = run(capsys, "bound", "6", "4", "--format", "csv")
        lines = out.strip().splitlines()
        assert lines[0] == "n,d,theorem_a,corollary_b"
        assert lines[1] == "6,4,1296,false"

    def test_usage_errors(self, capsys):
        assert run_usage_error(capsys, "bound", "0", "3") == 2
        assert run_usage_error(capsys, "bound", "3", "-1") == 2
        assert run_usage_error(capsys, "bound", "x", "3") == 2


class TestTable:
    def test_csv_cells(self, capsys):
        code, out = run(capsys, "table", "--n-max", "4", "--d-max", "4",
                        "--format", "csv")
        lines = out.strip().splitlines()
        assert lines[0] == "n,d,theorem_a"
        assert "4,4,128" in lines
        assert "2,3,8" in lines

    def test_single_cell(self, capsys):
        code, out = run(capsys, "table", "--n-max", "1", "--d-max", "1",
                        "--format", "csv")
        assert out.strip().splitlines() == ["n,d,theorem_a", "1,1,1"]

    def test_json(self, capsys):
        code, out = run(capsys, "table", "--n-max", "2", "--d-max", "3",
                        "--format", "json")
        cells = json.loads(out)
        assert {"n": 2, "d": 3, "theorem_a": "8"} in cells
        assert len(cells) == 6

    def test_pretty_grid(self, capsys):
        code, out = run(capsys, "table", "--n-max", "2", "--d-max", "2")
        assert "n\\d" in out

    def test_usage_error(self, capsys):
        assert run_usage_error(capsys, "table", "--n-max", "0", "--d-max", "2") == 2


class TestHomology:
    def test_prime_power(self, capsys):
        code, out = run(capsys, "homology", "--prime", "2", "--exponent", "1",
                        "--max-degree", "6")
        assert code == 0
        lines = [line.split() for line in out.splitlines() if line and line[0].isdigit()]
        by_degree = {line[0]: line[1:] for line in lines}
        assert by_degree["4"] == ["Z/4", "4"]
        assert by_degree["6"] == ["Z/6", "6"]

    def test_composite_json_round_trip(self, capsys):
        code, out = run(capsys, "homology", "6", "--max-degree", "2",
                        "--format", "json")
        group = GradedAbelianGroup.from_json(json.loads(out))
        assert group == model_homology(6, 2)
        assert group.summands(2) == (0, (2, 3))

    def test_degree_zero_only(self, capsys):
        code, out = run(capsys, "homology", "--prime", "3", "--exponent", "1",
                        "--max-degree", "0", "--format", "json")
        assert json.loads(out) == {"0": {"free": 1, "torsion": []}}

    def test_csv(self, capsys):
        code, out = run(capsys, "homology", "6", "--max-degree", "2",
                        "--format", "csv")
        lines = out.strip().splitlines()
        assert lines[0] == "degree,free,exponent,torsion"
        assert lines[3] == "2,0,6,2+3"

    def test_both_or_neither_rejected(self, capsys):
        assert run_usage_error(capsys, "homology", "--max-degree", "3") == 2
        assert run_usage_error(capsys, "homology", "6", "--prime", "2",
                               "--exponent", "1", "--max-degree", "3") == 2
        assert run_usage_error(capsys, "homology", "--prime", "2",
                               "--max-degree", "3") == 2

    def test_nonprime_rejected(self, capsys):
        assert run_usage_error(capsys, "homology", "--prime", "4",
                               "--exponent", "1", "--max-degree", "3") == 2


class TestWords:
    def test_census_members(self, capsys):
        code, out = run(capsys, "words", "2", "1", "--max-degree", "3")
        for w in ("σσ", "σφ_2", "σψ_2"):
            assert w in out

    def test_empty_listing(self, capsys):
        code, out = run(capsys, "words", "2", "1", "--max-degree", "1")
        assert code == 0
        data_lines = [line for line in out.splitlines() if line and line[0].isdigit()]
        assert data_lines == []

    def test_degree_seven_word(self, capsys):
        code, out = run(capsys, "words", "3", "1", "--max-degree", "7")
        assert "σγ_3φ_3" in out

    def test_ascii(self, capsys):
        code, out = run(capsys, "words", "3", "1", "--max-degree", "7", "--ascii")
        assert "sg_3f_3" in out
        assert "σ" not in out

    def test_json(self, capsys):
        code, out = run(capsys, "words", "2", "1", "--max-degree", "3",
                        "--format", "json")
        rows = json.loads(out)
        assert {"word": "σφ_2", "degree": 3, "height": 2} in rows

    def test_nonprime_rejected(self, capsys):
        assert run_usage_error(capsys, "words", "4", "1", "--max-degree", "3") == 2


class TestVerify:
    def test_snf_suite_passes(self, capsys):
        code, out = run(capsys, "verify", "--suite", "snf", "--seed", "7")
        assert code == 0
        assert "100/100 checks passed" in out
        assert "FAIL" not in out

    def test_seed_determinism(self, capsys):
        _, first = run(capsys, "verify", "--suite", "snf", "--seed", "3")
        _, second = run(capsys, "verify", "--suite", "snf", "--seed", "3")
        assert first == second

    def test_elementary_suite_passes(self, capsys):
        code, out = run(capsys, "verify", "--suite", "elementary")
        assert code == 0

    def test_all_suites_pass(self, capsys):
        code, out = run(capsys, "verify", "--suite", "all")
        assert code == 0
        assert "suite all" in out

    def test_unknown_suite_rejected(self, capsys):
        with pytest.raises(SystemExit) as err:
            cli.main(["verify", "--suite", "nope"])
        capsys.readouterr()
        assert err.value.code == 2

    def test_failure_exit_code(self, capsys, monkeypatch):
        monkeypatch.setattr(
            cli, "run_suite",
            lambda name, seed=0: [CheckResult("forced", False, "boom")])
        code, out = run(capsys, "verify", "--suite", "snf")
        assert code == 1
        assert "FAIL" in out


class TestDeterminism:
    @pytest.mark.parametrize("argv", [
        ("bound", "12", "5", "--compare", "--format", "json"),
        ("table", "--n-max", "6", "--d-max", "4", "--format", "csv"),
        ("homology", "12", "--max-degree", "8", "--format", "json"),
        ("words", "2", "1", "--max-degree", "10", "--format", "csv"),
    ])
    def test_repeat_runs_identical(self, capsys, argv):
        _, first = run(capsys, *argv)
        _, second = run(capsys, *argv)
        assert first == second

    def test_no_ansi_when_not_a_tty(self, capsys):
        _, out = run(capsys, "verify", "--suite", "elementary")
        assert "\033[" not in out
