"""
Tests for leaves, closed-form initial ideals and minimal-prime transfer.
"""

import pytest

from monomial_ideal_core.errors import InputError, PreconditionViolated
from monomial_ideal_core.groebner import initial_ideal
from monomial_ideal_core.models import (
    CompletionStrategy,
    LinearForm,
    MonomialIdeal,
    TermOrder,
)
from monomial_ideal_core.serialization import parse_ideal_text
from monomial_ideal_core.transforms import (
    TransferCase,
    binomial_context,
    check_min_prime_transfer,
    find_leaf_pairs,
    find_leaves,
    ini_binomial,
    ini_transform,
    ini_trinomial,
    is_leaf_pair,
)


def make(variables: str, gens: str) -> MonomialIdeal:
    return parse_ideal_text(f"vars {variables}\ngens {gens}\n")


def idx(ideal: MonomialIdeal, *names: str) -> list[int]:
    return [ideal.ring.index(name) for name in names]


def cycle(n: int) -> MonomialIdeal:
    variables = " ".join(f"x{i}" for i in range(1, n + 1))
    edges = " ".join(f"x{i}*x{i % n + 1}" for i in range(1, n + 1))
    return make(variables, edges)


@pytest.fixture
def path4():
    """Path a - x - y - b, whose ends form a leaf pair."""
    return make("a b x y", "a*x x*y y*b")


class TestLeaves:
    """Test leaf and leaf-pair detection."""

    def test_path_leaves(self, path4):
        assert find_leaves(path4) == tuple(idx(path4, "a", "b"))

    def test_cycle_has_no_leaves(self):
        assert find_leaves(cycle(5)) == ()

    def test_mixed_degrees(self):
        ideal = make("a b c d", "a^2*b*c a*d b^3*c*d")
        assert find_leaves(ideal) == ()
        assert find_leaves(make("a b c d", "a^2*b*c b*d")) == tuple(idx(ideal, "a", "c", "d"))

    def test_leaf_pair(self, path4):
        a, b, x, y = idx(path4, "a", "b", "x", "y")
        pairs = [p for p in find_leaf_pairs(path4) if p.a == a and p.b == b]
        assert len(pairs) == 1
        assert pairs[0].z.support() == (x,)
        assert pairs[0].w.support() == (y,)
        assert pairs[0].format(path4.ring) == "(a, b; z=x, w=y)"
        assert is_leaf_pair(path4, b, a)

    def test_no_leaf_pair_without_middle_edge(self):
        ideal = make("a b x y", "a*x y*b")
        assert find_leaf_pairs(ideal) == []

    def test_shared_generator_is_not_a_pair(self):
        assert find_leaf_pairs(make("a b", "a*b")) == []


class TestBinomial:
    """Test ini(I, a + b) in the leaf and leaf-pair contexts."""

    def test_leaf(self):
        ideal = make("a b c d", "a^2*b*c b*d")
        a, b = idx(ideal, "a", "b")
        assert binomial_context(ideal, a, b) == "leaf"
        assert ini_binomial(ideal, a, b) == make("a b c d", "a b^3*c b*d")

    def test_single_edge(self):
        ideal = make("a b", "a*b")
        assert ini_binomial(ideal, 0, 1) == make("a b", "a b^2")

    def test_leaf_pair(self, path4):
        a, b = idx(path4, "a", "b")
        assert binomial_context(path4, a, b) == "leaf_pair"
        assert ini_binomial(path4, a, b) == make("a b x y", "a b*x x*y y*b")

    @pytest.mark.parametrize("strategy", list(CompletionStrategy))
    def test_matches_oracle(self, path4, strategy):
        ring = path4.ring
        order = TermOrder.complete(ring, [["a", "b"]], strategy)
        oracle = initial_ideal(path4, LinearForm.parse(ring, "a+b"), order)
        assert ini_binomial(path4, *idx(path4, "a", "b")) == oracle

    def test_outside_context(self):
        ideal = cycle(5)
        with pytest.raises(PreconditionViolated) as info:
            ini_binomial(ideal, *idx(ideal, "x1", "x3"))
        assert info.value.condition == "leaf or leaf pair"

    def test_override_checked_by_oracle(self):
        ideal = cycle(5)
        result = ini_binomial(ideal, *idx(ideal, "x1", "x3"), override=True)
        assert result == make("x1 x2 x3 x4 x5", "x1 x2*x3 x3*x5 x3*x4 x4*x5")

    def test_same_variable(self):
        with pytest.raises(InputError):
            ini_binomial(make("a b", "a*b"), 0, 0)


class TestTrinomial:
    """Test ini(I, a + b + c)."""

    def test_cycle5(self):
        ideal = cycle(5)
        result = ini_trinomial(ideal, *idx(ideal, "x1", "x5", "x2"))
        assert result == make("x1 x2 x3 x4 x5", "x1 x2*x3 x3*x4 x4*x5 x5*x2 x5^2 x4*x2^2")

    def test_cycle8(self):
        ideal = cycle(8)
        result = ini_trinomial(ideal, *idx(ideal, "x1", "x8", "x2"))
        gens = ["x1", "x8*x2", "x8^2", "x7*x2^2"] + [f"x{i}*x{i + 1}" for i in range(2, 8)]
        assert result == make(" ".join(f"x{i}" for i in range(1, 9)), " ".join(gens))

    @pytest.mark.parametrize("strategy", list(CompletionStrategy))
    def test_matches_oracle(self, strategy):
        ideal = cycle(8)
        order = TermOrder.complete(ideal.ring, [["x1", "x8", "x2"]], strategy)
        oracle = initial_ideal(ideal, LinearForm.parse(ideal.ring, "x1+x8+x2"), order)
        assert ini_trinomial(ideal, *idx(ideal, "x1", "x8", "x2")) == oracle

    def test_bc_clause(self):
        ideal = cycle(3)
        with pytest.raises(PreconditionViolated) as info:
            ini_trinomial(ideal, *idx(ideal, "x1", "x3", "x2"))
        assert info.value.condition == "bc"

    def test_degree_clause(self):
        ideal = make("a b c d", "a^2*b c*d")
        with pytest.raises(PreconditionViolated) as info:
            ini_trinomial(ideal, *idx(ideal, "a", "b", "c"))
        assert info.value.condition == "a"

    def test_covering_clause(self):
        ideal = make("a b c d", "a*d b*d")
        with pytest.raises(PreconditionViolated) as info:
            ini_trinomial(ideal, *idx(ideal, "a", "b", "c"))
        assert info.value.condition == "b"


class TestTransform:
    """Test the dispatching closed form."""

    def test_trinomial_dispatch(self):
        ideal = cycle(5)
        order = TermOrder.lex(ideal.ring, ["x1", "x5", "x2", "x3", "x4"])
        form = LinearForm.parse(ideal.ring, "x2+x1+x5")
        assert ini_transform(ideal, form, order) == initial_ideal(ideal, form, order)

    def test_falls_back(self):
        ideal = cycle(3)
        order = TermOrder.lex(ideal.ring, ["x1", "x3", "x2"])
        assert ini_transform(ideal, LinearForm.parse(ideal.ring, "x1+x3+x2"), order) is None
        assert ini_transform(ideal, LinearForm.parse(ideal.ring, "x1+x2"), order) is None

    def test_long_form_has_no_closed_form(self):
        ideal = cycle(8)
        order = TermOrder.default(ideal.ring)
        form = LinearForm.parse(ideal.ring, "x6+x7+x2+x5")
        assert ini_transform(ideal, form, order) is None


class TestTransfer:
    """Test minimal-prime transfer reports."""

    def test_leaf_pair(self, path4):
        report = check_min_prime_transfer(path4, TransferCase.LEAF_PAIR, *idx(path4, "a", "b"))
        assert report.holds
        assert report.checked_primes == 3
        assert report.engine == "transform"

    def test_leaf_pair_converse(self, path4):
        report = check_min_prime_transfer(
            path4, TransferCase.LEAF_PAIR_CONVERSE, *idx(path4, "a", "b")
        )
        assert report.holds
        assert report.checked_primes == 3

    def test_leaf(self):
        ideal = make("a b c d", "a^2*b*c b*d")
        report = check_min_prime_transfer(ideal, TransferCase.LEAF, *idx(ideal, "a", "b"))
        assert report.holds

    def test_trinomial(self):
        ideal = make("a b c d", "a*b a*c b*d")
        report = check_min_prime_transfer(ideal, TransferCase.TRINOMIAL, *idx(ideal, "a", "b", "c"))
        assert report.holds
        assert report.checked_primes == 2

    def test_with_oracle(self, path4):
        report = check_min_prime_transfer(
            path4, TransferCase.LEAF_PAIR, *idx(path4, "a", "b"), use_oracle=True
        )
        assert report.holds
        assert report.engine == "buchberger"

    def test_hypotheses_checked(self):
        with pytest.raises(PreconditionViolated):
            check_min_prime_transfer(cycle(5), TransferCase.LEAF, 0, 1)
        with pytest.raises(PreconditionViolated):
            ideal = make("a b c d", "a*b a*c a*d")
            check_min_prime_transfer(ideal, TransferCase.TRINOMIAL, 0, 1, 2)
        with pytest.raises(PreconditionViolated):
            check_min_prime_transfer(make("a b c d", "a*b a*c b*d"), TransferCase.TRINOMIAL, 0, 1)

    def test_converse_needs_edge_ideal(self):
        ideal = make("a b x y c", "a*x x*y y*b c^2")
        with pytest.raises(PreconditionViolated) as info:
            check_min_prime_transfer(ideal, TransferCase.LEAF_PAIR_CONVERSE, 0, 1)
        assert info.value.condition == "edge_ideal"
