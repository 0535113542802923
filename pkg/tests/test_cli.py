"""The command-line interface: output, JSON schema and exit codes."""

import io
import json
import subprocess
import sys

import pytest

from omegasum.cli import run_cli

GRANDI = "sum(i=1..omega, (-1)^(i+1))"
NATURALS = "sum(i=1..omega, i)"


def run(capsys, *argv):
    code = run_cli(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestEval:
    def test_value(self, capsys):
        code, out, err = run(capsys, "eval", NATURALS)
        assert (code, out, err) == (0, "w^2/2 + w/2\n", "")

    def test_principal(self, capsys):
        code, out, _ = run(capsys, "eval", "--principal", NATURALS)
        assert (code, out) == (0, "w^2/2\n")

    def test_standard_part(self, capsys):
        assert run(capsys, "eval", "--std", GRANDI)[:2] == (0, "1/2\n")
        assert run(capsys, "eval", "--std", NATURALS)[:2] == (0, "none\n")

    def test_json_schema(self, capsys):
        code, out, _ = run(capsys, "eval", "--json", NATURALS)
        assert code == 0
        data = json.loads(out)
        assert list(data) == ["input", "value", "principal", "standardPart", "terms"]
        assert data["input"] == NATURALS
        assert data["value"] == "w^2/2 + w/2"
        assert data["principal"] == "w^2/2"
        assert data["standardPart"] is None
        assert data["terms"] == [
            {"coeff": "1/2", "base": "1", "power": 2},
            {"coeff": "1/2", "base": "1", "power": 1},
        ]

    def test_json_standard_part_string(self, capsys):
        data = json.loads(run(capsys, "eval", "--json", GRANDI)[1])
        assert data["standardPart"] == "1/2"

    def test_neg_base_mode(self, capsys):
        expr = "sum(i=1..omega, (-1/2)^i)"
        code, _, err = run(capsys, "eval", expr)
        assert code == 2
        assert "base" in err
        code, out, _ = run(capsys, "eval", "--neg-base-mode", "conjecture", expr)
        assert (code, out) == (0, "-1/3\n")

    def test_max_degree(self, capsys):
        code, _, err = run(capsys, "eval", "--max-degree", "2", "sum(i=1..omega, i^3)")
        assert code == 2
        assert "degree" in err

    def test_parse_error_exit_code(self, capsys):
        code, out, err = run(capsys, "eval", "sum(i=1..omega, ")
        assert code == 2
        assert out == ""
        assert "offset" in err


class TestPartial:
    def test_exact_value(self, capsys):
        assert run(capsys, "partial", "--n", "5", NATURALS)[:2] == (0, "15\n")

    def test_exact_fraction(self, capsys):
        expr = "sum(i=1..omega, (1/2)^(i-1))"
        assert run(capsys, "partial", "--n", "3", expr)[:2] == (0, "7/4\n")

    def test_json(self, capsys):
        data = json.loads(run(capsys, "partial", "--json", "--n", "5", NATURALS)[1])
        assert data == {"input": NATURALS, "n": 5, "partialSum": "15"}

    def test_out_of_range(self, capsys):
        code, _, err = run(capsys, "partial", "--n", "-1", NATURALS)
        assert code == 2
        assert err


class TestOracle:
    def test_formula_check_passes(self, capsys):
        code, out, _ = run(capsys, "oracle", "--N", "200", "sum(i=1..omega, i*(-1)^(i-1))")
        assert code == 0
        assert out.startswith("pass")

    def test_formula_check_json(self, capsys):
        code, out, _ = run(capsys, "oracle", "--json", "--N", "50", GRANDI)
        assert code == 0
        data = json.loads(out)
        assert data["status"] == "pass"
        assert data["checkedRange"] == [1, 51]
        assert data["firstMismatch"] is None

    def test_holder_crosscheck_passes(self, capsys):
        code, out, _ = run(capsys, "oracle", "--holder", "1", "--N", "100000", GRANDI)
        assert code == 0
        assert out.startswith("pass")

    def test_holder_crosscheck_fail_exit_code(self, capsys):
        code, out, _ = run(
            capsys, "oracle", "--holder", "1", "--N", "9", "--tol", "1e-12", GRANDI
        )
        assert code == 1
        assert out.startswith("fail")

    def test_infinite_standard_part(self, capsys):
        code, _, err = run(capsys, "oracle", "--holder", "1", "--N", "10", NATURALS)
        assert code == 2
        assert "standard part" in err


class TestBatchMode:
    def test_lines_processed_in_order(self, capsys, monkeypatch):
        monkeypatch.setattr(sys, "stdin", io.StringIO(f"{NATURALS}\n\n{GRANDI}\n"))
        code, out, err = run(capsys, "eval")
        assert code == 0
        assert out == "w^2/2 + w/2\n1/2\n"
        assert err == ""

    def test_bad_line_reported_and_others_continue(self, capsys, monkeypatch):
        monkeypatch.setattr(sys, "stdin", io.StringIO(f"nonsense\n{GRANDI}\n"))
        code, out, err = run(capsys, "eval")
        assert code == 2
        assert out == "1/2\n"
        assert "line 1" in err


class TestUsage:
    def test_missing_subcommand(self, capsys):
        assert run(capsys, )[0] == 2

    def test_unknown_flag(self, capsys):
        assert run(capsys, "eval", "--bogus", NATURALS)[0] == 2

    def test_help_exits_zero(self, capsys):
        assert run(capsys, "--help")[0] == 0

    def test_module_entry_point(self):
        result = subprocess.run(
            [sys.executable, "-m", "omegasum", "eval", NATURALS],
            capture_output=True,
            text=True,
        )
        assert result.returncode == 0
        assert result.stdout == "w^2/2 + w/2\n"
