"""
Tests for the monoideal command line.
"""

import json
import logging

import pytest

from ideal_explorer.checks.suite import ASSOCIATED_EXAMPLE
from ideal_explorer.cli import ExitStatus, build_parser, main, run


@pytest.fixture
def c5_file(tmp_path):
    path = tmp_path / "c5.ideal"
    path.write_text("vars x1 x2 x3 x4 x5\ngens x1*x2 x2*x3 x3*x4 x4*x5 x5*x1\n")
    return path


@pytest.fixture
def example_file(tmp_path):
    path = tmp_path / "example.ideal"
    path.write_text(ASSOCIATED_EXAMPLE)
    return path


class TestParser:
    """Test argument parsing."""

    def test_common_flags_on_leaves(self):
        args = build_parser().parse_args(["seq", "cycle", "5", "--json", "--field", "GF2"])
        assert args.json
        assert args.field == "GF2"
        assert args.seq_command == "cycle"

    def test_depth_defaults_to_stdin(self):
        args = build_parser().parse_args(["depth"])
        assert args.target == "-"
        assert args.params == []

    @pytest.mark.parametrize(
        "command, phrase",
        [
            (["star"], "decomposition via star neighbors"),
            (["ass"], "by polarization"),
            (["ini"], "binomials and trinomials"),
            (["seq"], "Initially regular sequences"),
            (["depth"], "cycle depth formula"),
        ],
    )
    def test_help_names_results(self, command, phrase, capsys):
        with pytest.raises(SystemExit):
            build_parser().parse_args([*command, "--help"])
        assert phrase in " ".join(capsys.readouterr().out.split())

    def test_unknown_check_rejected(self):
        with pytest.raises(SystemExit):
            build_parser().parse_args(["check", "--only", "everything"])


class TestCommands:
    """Test subcommand results."""

    def test_gen_text(self):
        result = run(["gen", "cycle", "5"])
        assert result.status is ExitStatus.OK
        assert result.text == "vars x1 x2 x3 x4 x5\ngens x1*x2 x1*x5 x2*x3 x3*x4 x4*x5"

    def test_gen_json(self):
        result = run(["gen", "path", "2", "--json"])
        assert json.loads(result.render(as_json=True)) == {
            "vars": ["y1", "y2"],
            "gens": [[1, 1]],
        }

    def test_depth_formula(self):
        result = run(["depth", "cycle", "5"])
        assert result.payload == {"formula": {"depth": 2, "method": "formula"}}

    def test_depth_compare(self):
        result = run(["depth", "gnm", "5", "2", "--compare"])
        assert result.status is ExitStatus.OK
        assert result.payload["agree"]
        assert result.payload["oracle"]["depth"] == 3

    def test_depth_of_file(self, c5_file):
        result = run(["depth", str(c5_file)])
        assert result.payload["oracle"]["depth"] == 2
        assert result.payload["oracle"]["field"] == "QQ"
        assert "formula" not in result.payload

    def test_depth_file_rejects_compare(self, c5_file):
        assert run(["depth", str(c5_file), "--compare"]).status is ExitStatus.INPUT_ERROR

    def test_ass_compare(self, example_file):
        result = run(["ass", str(example_file), "--compare"])
        assert result.status is ExitStatus.OK
        assert len(result.payload["associated_primes"]) == 13
        assert len(result.payload["embedded_primes"]) == 8
        assert result.payload["agrees_with_witness_scan"]
        assert "13 associated primes, 8 embedded" in result.text

    def test_min_primes(self, example_file):
        result = run(["min-primes", str(example_file)])
        assert sorted("".join(p) for p in result.payload["minimal_primes"]) == [
            "abef", "ace", "bdef", "cde", "cdg",
        ]

    def test_star_decompose(self, example_file):
        result = run(["star", str(example_file), "--decompose"])
        assert result.status is ExitStatus.OK
        primes = ["".join(d["prime"]) for d in result.payload["decompositions"]]
        assert "abcdeg" in primes
        assert len(primes) == 8

    def test_polarize(self, tmp_path):
        path = tmp_path / "power.ideal"
        path.write_text("vars x y\ngens x^2 x*y\n")
        result = run(["polarize", str(path), "--json"])
        origin = result.payload["origin"]
        assert len(origin) == 3
        assert sorted(origin.values()) == [["x", 1], ["x", 2], ["y", 1]]

    def test_ini_both_agree(self, c5_file):
        result = run(
            ["ini", str(c5_file), "-f", "x1+x5+x2", "--order", "x1,x5,x2,x4,x3", "--engine", "both"]
        )
        assert result.status is ExitStatus.OK
        assert result.payload["equal"]
        assert result.payload["only_closed_form"] == []
        assert "x5^2" in result.payload["ideal"]

    def test_ini_default_order(self, c5_file):
        result = run(["ini", str(c5_file), "-f", "x1+x5+x2"])
        assert result.payload["order"] == ["x1", "x5", "x2", "x4", "x3"]
        assert result.payload["engine"] == "transform"

    def test_ini_transfer(self, c5_file):
        result = run(["ini", str(c5_file), "-f", "x1+x5+x2", "--transfer", "trinomial"])
        assert result.status is ExitStatus.OK
        assert result.payload["transfer"]["holds"]
        assert result.payload["transfer"]["checked_primes"] > 0

    def test_ini_transfer_precondition(self, c5_file):
        result = run(["ini", str(c5_file), "-f", "x1+x3", "--transfer", "leaf"])
        assert result.exit_code == 2
        assert result.payload["error"] == "PreconditionViolated"

    def test_seq_cycle_verify(self, tmp_path):
        plan_path = tmp_path / "c5.json"
        result = run(["seq", "cycle", "5", "--verify", "--save", str(plan_path)])
        assert result.status is ExitStatus.OK
        assert result.payload["verification"]["verified_length"] == 2
        assert json.loads(plan_path.read_text())["provenance"] == "cycle C_5"

    def test_seq_verify_completions(self, tmp_path, c5_file):
        plan_path = tmp_path / "c5.json"
        run(["seq", "cycle", "5", "--save", str(plan_path)])
        argv = ["seq", "verify", str(c5_file), "--plan", str(plan_path), "--completions", "3"]
        result = run(argv)
        assert result.status is ExitStatus.OK
        assert [v["verified_length"] for v in result.payload["verifications"]] == [2, 2, 2]

    def test_seq_gnm2(self):
        result = run(["seq", "gnm2", "1", "--verify", "--json"])
        assert result.payload["verification"]["verified_length"] == 3

    def test_check(self):
        result = run(["check", "--only", "ass-example"])
        assert result.status is ExitStatus.OK
        assert result.payload["passed"]
        assert result.text.splitlines()[-1] == "1/1 checks passed"


class TestErrors:
    """Test exit statuses for bad input."""

    def test_missing_file(self, tmp_path):
        result = run(["ass", str(tmp_path / "missing.ideal")])
        assert result.status is ExitStatus.INPUT_ERROR
        assert result.payload["error"] == "InputError"

    def test_bad_form(self, c5_file):
        result = run(["ini", str(c5_file), "-f", "x1+x9"])
        assert result.exit_code == 2

    def test_unknown_family_size(self):
        assert run(["gen", "cycle", "2"]).exit_code == 2

    def test_bad_budget_file(self, tmp_path):
        config = tmp_path / "budgets.yaml"
        config.write_text("- not a mapping\n")
        assert run(["gen", "cycle", "5", "--config", str(config)]).exit_code == 2


class TestMain:
    """Test the process entry point."""

    def test_prints_result(self, capsys):
        assert main(["depth", "path", "4"]) == 0
        assert capsys.readouterr().out.strip() == "depth(R/I) = 2 (formula)"

    def test_clean_run_logs_no_warnings(self, caplog):
        caplog.set_level(logging.INFO)
        assert run(["seq", "cycle", "5", "--verify"]).status is ExitStatus.OK
        assert any("falling back to Buchberger" in r.getMessage() for r in caplog.records)
        assert not [r for r in caplog.records if r.levelno >= logging.WARNING]

    def test_input_error_goes_to_stderr(self, capsys, tmp_path):
        assert main(["min-primes", str(tmp_path / "nope.ideal")]) == 2
        captured = capsys.readouterr()
        assert captured.out == ""
        assert captured.err.startswith("error:")

    def test_json_error_document(self, capsys, tmp_path):
        assert main(["min-primes", str(tmp_path / "nope.ideal"), "--json"]) == 2
        data = json.loads(capsys.readouterr().out)
        assert data["status"] == "input_error"
