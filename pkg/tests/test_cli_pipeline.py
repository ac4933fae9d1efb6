"""Integration tests for monoideal pipelines: generate, save, reload, verify."""

import json

import pytest

from ideal_explorer.cli import main


def test_generated_ideal_round_trips_through_depth(tmp_path, capsys):
    """Test that a generated edge ideal feeds the depth oracle."""
    assert main(["gen", "gnm", "5", "2"]) == 0
    path = tmp_path / "g52.ideal"
    path.write_text(capsys.readouterr().out)

    assert main(["depth", str(path), "--json"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["oracle"]["depth"] == 3


def test_saved_plan_verifies_under_completions(tmp_path, capsys):
    """Test a unicyclic plan saved by one command and verified by another."""
    plan = tmp_path / "g52.json"
    ideal = tmp_path / "g52.ideal"
    assert main(["seq", "gnm2", "1", "--save", str(plan)]) == 0
    capsys.readouterr()
    assert main(["gen", "gnm", "5", "2"]) == 0
    ideal.write_text(capsys.readouterr().out)

    code = main(["seq", "verify", str(ideal), "--plan", str(plan), "--completions", "3", "--json"])
    assert code == 0
    data = json.loads(capsys.readouterr().out)
    assert {v["verified_length"] for v in data["verifications"]} == {3}
    assert len({tuple(v["order"]) for v in data["verifications"]}) == 3


def test_sample_example_decomposes(ideals_dir, capsys):
    """Test star decompositions of the shipped example."""
    path = ideals_dir / "associated_example.ideal"
    assert main(["star", str(path), "--decompose", "--json"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["star_neighbors"]["a"] == ["d"]
    assert len(data["decompositions"]) == 8


def test_ini_matches_buchberger_on_sample(ideals_dir, capsys):
    """Test the closed-form first step on the shipped 5-cycle."""
    path = ideals_dir / "c5.ideal"
    assert main(["ini", str(path), "-f", "x1+x5+x2", "--engine", "both", "--json"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["equal"]
    assert sorted(data["ideal"]) == sorted(
        ["x1", "x2*x3", "x3*x4", "x4*x5", "x2*x5", "x5^2", "x2^2*x4"]
    )


@pytest.mark.slow
def test_quick_suite_passes(capsys):
    """Test the whole suite in quick mode."""
    assert main(["check", "--quick", "--seed", "3", "--json"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["passed"]
    assert len(data["checks"]) == 8
