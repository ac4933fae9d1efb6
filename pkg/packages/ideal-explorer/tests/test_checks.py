"""
Tests for the random instance generators and the check suite.
"""

import random

import pytest

from monomial_ideal_core.errors import InputError
from monomial_ideal_core.primes import has_no_embedded_hypothesis, regular_form_family_condition
from monomial_ideal_core.transforms import (
    binomial_context,
    check_trinomial_conditions,
    is_leaf_pair,
)

from ideal_explorer.checks import (
    CheckResult,
    CheckSuite,
    binomial_instance,
    leaf_pair_instance,
    random_ideal,
    regular_family,
    top_degree_ideal,
    trinomial_instance,
)


class TinySuite(CheckSuite):
    """Quick suite with a handful of random instances per check."""

    QUICK_COUNTS = {
        "transform-oracle": 8,
        "embedded-property": 6,
        "corollaries": 6,
    }
    QUICK_CYCLE_RANGE = range(3, 7)


class TestGenerators:
    """Test that generated instances meet their preconditions."""

    def test_random_ideal(self):
        rng = random.Random(1)
        for _ in range(50):
            ideal = random_ideal(rng, max_vars=5, max_exponent=3)
            assert not ideal.is_zero
            assert 2 <= ideal.ring.n <= 5
            assert all(max(m.exponents) <= 3 for m in ideal.gens)

    def test_top_degree_ideal(self):
        rng = random.Random(2)
        for _ in range(50):
            assert has_no_embedded_hypothesis(top_degree_ideal(rng))

    def test_regular_family(self):
        rng = random.Random(3)
        found = 0
        for _ in range(50):
            ideal = top_degree_ideal(rng)
            form = regular_family(rng, ideal)
            if form is None:
                continue
            found += 1
            b0, *others = form.support
            assert regular_form_family_condition(ideal, b0, others)
        assert found > 0

    def test_binomial_instance(self):
        rng = random.Random(4)
        for _ in range(30):
            instance = binomial_instance(rng)
            a, b = instance.variables
            assert binomial_context(instance.ideal, a, b) is not None
            assert instance.order.rank(a) < instance.order.rank(b)

    def test_leaf_pair_instance(self):
        rng = random.Random(6)
        for _ in range(30):
            instance = leaf_pair_instance(rng)
            a, b = instance.variables
            assert binomial_context(instance.ideal, a, b) == "leaf_pair"
            assert is_leaf_pair(instance.ideal, a, b)
            assert instance.order.rank(a) < instance.order.rank(b)

    def test_instance_orders(self):
        rng = random.Random(7)
        for _ in range(20):
            instance = trinomial_instance(rng)
            orders = instance.orders()
            assert orders[0] == instance.order
            assert len(set(orders)) == len(orders)
            a, b, c = instance.variables
            for order in orders:
                assert order.rank(a) < order.rank(b) < order.rank(c)
            if instance.ideal.ring.n >= 5:
                assert len(orders) == 3

    def test_trinomial_instance(self):
        rng = random.Random(5)
        for _ in range(30):
            instance = trinomial_instance(rng)
            check_trinomial_conditions(instance.ideal, *instance.variables)
            assert len(instance.form) == 3

    def test_seeded(self):
        first = [random_ideal(random.Random(9)) for _ in range(3)]
        second = [random_ideal(random.Random(9)) for _ in range(3)]
        assert first == second


class TestCheckSuite:
    """Test running named checks."""

    def test_names(self):
        assert CheckSuite.NAMES == (
            "cycle-depth",
            "cycle-sequences",
            "transform-oracle",
            "ass-example",
            "embedded-property",
            "corollaries",
            "unicyclic-depth",
            "lower-bound",
        )

    def test_ass_example(self):
        [result] = CheckSuite().run(["ass-example"])
        assert result.passed, result.failures
        assert result.instances == 10

    def test_cycle_depth(self):
        result = TinySuite(quick=True).run_check("cycle-depth")
        assert result.passed, result.failures
        assert result.instances == 4

    def test_random_checks(self):
        suite = TinySuite(seed=11, quick=True)
        results = suite.run(["transform-oracle", "embedded-property", "corollaries"])
        assert [r.name for r in results] == ["transform-oracle", "embedded-property", "corollaries"]
        for result in results:
            assert result.passed, result.failures
        assert results[0].instances == 2 * 3 + 8

    def test_reproducible(self):
        first = TinySuite(seed=5, quick=True).run(["corollaries"])
        second = TinySuite(seed=5, quick=True).run(["corollaries"])
        assert [r.to_json() for r in first] == [r.to_json() for r in second]

    def test_sequences_fill_ledger(self):
        suite = TinySuite(quick=True)
        result = suite.run_check("cycle-sequences")
        assert result.passed, result.failures
        assert suite.ledger
        assert {entry.verified_length for entry in suite.ledger} <= {1, 2}

    def test_timeout(self):
        result = CheckSuite(timeout=1e-9).run_check("cycle-depth")
        assert not result.passed
        assert "timed out" in result.failures[-1]

    def test_unknown_check(self):
        with pytest.raises(InputError):
            CheckSuite().run(["no-such-check"])

    def test_result_format(self):
        result = CheckResult("demo", False, 3, ("bad instance",), 0.5)
        lines = result.format().splitlines()
        assert lines == ["FAIL demo: 3 instances in 0.50s", "    bad instance"]
        assert result.to_json() == {
            "name": "demo",
            "passed": False,
            "instances": 3,
            "failures": ["bad instance"],
        }

    @pytest.mark.slow
    def test_unicyclic_and_lower_bound(self):
        suite = CheckSuite(quick=True)
        unicyclic = suite.run_check("unicyclic-depth")
        assert unicyclic.passed, unicyclic.failures
        lower = suite.run_check("lower-bound")
        assert lower.passed, lower.failures
        assert lower.instances == 2

    @pytest.mark.slow
    def test_lower_bound_defaults(self):
        result = CheckSuite().run_check("lower-bound")
        assert result.passed, result.failures
        assert result.instances == 6 + 2
