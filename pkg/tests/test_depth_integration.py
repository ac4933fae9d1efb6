"""Integration tests for depth: closed formulas, the homological oracle and sequences.

Each test runs a whole family through both the formula and the oracle. The
larger ranges are marked slow.
"""

import pytest

from monomial_ideal_core.homology import depth_oracle
from monomial_ideal_core.primes import associated_primes, embedded_primes
from monomial_ideal_core.serialization import load_ideal
from monomial_ideal_core.settings import Budgets, Field

from ideal_explorer.families import (
    build_graph_ideal,
    depth_cycle_formula,
    depth_path_formula,
    depth_unicyclic_formula,
)
from ideal_explorer.sequences import (
    alternative_completions,
    cycle_sequence,
    unicyclic_sequence,
    verify_initially_regular,
)


@pytest.mark.parametrize("n", range(3, 9))
def test_cycle_formula_matches_oracle(n):
    """Test the cycle formula against Hochster's formula."""
    assert depth_oracle(build_graph_ideal("cycle", n)).value == depth_cycle_formula(n)


@pytest.mark.parametrize("p", range(2, 9))
def test_path_formula_matches_oracle(p):
    """Test the path formula against Hochster's formula."""
    assert depth_oracle(build_graph_ideal("path", p)).value == depth_path_formula(p)


@pytest.mark.slow
@pytest.mark.parametrize("n,m", [(n, m) for n in range(3, 7) for m in range(0, 4)])
def test_unicyclic_formula_matches_oracle(n, m):
    """Test every residue case of the unicyclic formula."""
    ideal = build_graph_ideal("gnm", n, m)
    assert depth_oracle(ideal).value == depth_unicyclic_formula(n, m)


def test_field_does_not_change_cycle_depth():
    """Edge ideals of cycles have no torsion in the relevant homology."""
    ideal = build_graph_ideal("cycle", 6)
    qq = depth_oracle(ideal, Budgets(field=Field.QQ))
    gf2 = depth_oracle(ideal, Budgets(field=Field.GF2))
    assert qq.value == gf2.value == 2


@pytest.mark.slow
@pytest.mark.parametrize("m", range(3, 12))
def test_sequences_certify_cycle_depth(m):
    """Test that every completion of the cycle plan reaches the depth."""
    ideal = build_graph_ideal("cycle", m)
    expected = depth_cycle_formula(m)
    for plan in alternative_completions(cycle_sequence(m), k=3):
        assert verify_initially_regular(ideal, plan).verified_length == expected


@pytest.mark.parametrize("t", [1, 2])
def test_unicyclic_sequence_is_a_lower_bound(t):
    """Test the unicyclic plan against the oracle depth."""
    ideal = build_graph_ideal("gnm", 3 * t + 2, 2)
    trace = verify_initially_regular(ideal, unicyclic_sequence(t))
    assert trace.verified_length == t + 2
    assert trace.verified_length <= depth_oracle(ideal).value


def test_sample_files(ideals_dir, associated_example):
    """Test the sample ideals shipped with the repository."""
    c5 = load_ideal(ideals_dir / "c5.ideal")
    assert c5 == build_graph_ideal("cycle", 5)
    assert len(embedded_primes(associated_example)) == 8
    power = load_ideal(ideals_dir / "pentagon_power.ideal")
    assert not embedded_primes(power)
    assert len(associated_primes(power)) == len(associated_primes(c5))
