"""
Tests for rings, monomials, ideals, term orders and the exchange formats.
"""

import json

import pytest

from monomial_ideal_core.errors import InputError, ParseError, UnitIdeal, ZeroIdeal
from monomial_ideal_core.models import (
    CompletionStrategy,
    LinearForm,
    Monomial,
    MonomialIdeal,
    RingSpec,
    TermOrder,
    bracket_power,
    colon,
    extend_ring,
    ideal_sum_with_variables,
    minimal_generators,
    squarefree_part,
    var_degree,
)
from monomial_ideal_core.serialization import (
    format_ideal_text,
    ideal_from_json,
    ideal_to_json,
    load_ideal,
    parse_ideal,
    parse_ideal_text,
    parse_monomial,
)


def make(variables: str, gens: str) -> MonomialIdeal:
    return parse_ideal_text(f"vars {variables}\ngens {gens}\n")


C5 = "x1*x2 x2*x3 x3*x4 x4*x5 x1*x5"


class TestRingSpec:
    """Test RingSpec validation."""

    def test_rejects_duplicates(self):
        """Duplicate variable names are refused."""
        with pytest.raises(InputError):
            RingSpec(("x", "y", "x"))

    def test_rejects_bad_names(self):
        """Names must start with a letter."""
        with pytest.raises(InputError):
            RingSpec(("1x",))

    def test_rejects_empty(self):
        with pytest.raises(InputError):
            RingSpec(())

    def test_index_unknown(self):
        ring = RingSpec.of(["a", "b"])
        assert ring.index("b") == 1
        with pytest.raises(InputError):
            ring.index("c")


class TestMonomial:
    """Test monomial arithmetic."""

    def test_divides_and_lcm(self):
        a = Monomial((1, 2, 0))
        b = Monomial((2, 2, 1))
        assert a.divides(b)
        assert not b.divides(a)
        assert a.lcm(Monomial((0, 3, 1))) == Monomial((1, 3, 1))
        assert a.gcd(b) == a

    def test_colon_and_radical(self):
        m = Monomial((3, 1, 0))
        assert m.colon(Monomial((1, 2, 5))) == Monomial((2, 0, 0))
        assert m.radical() == Monomial((1, 1, 0))

    def test_format(self):
        ring = RingSpec.of(["x1", "x2", "x3"])
        assert Monomial((1, 3, 0)).format(ring) == "x1*x2^3"
        assert ring.one().format(ring) == "1"

    def test_negative_exponent(self):
        with pytest.raises(InputError):
            Monomial((1, -1))


class TestMinimalGenerators:
    """Test canonical minimal generating sets."""

    def test_drops_multiples(self):
        """x1x2 divides x1x2x3, so the latter is dropped."""
        ideal = make("x1 x2 x3", "x1*x2 x1*x2*x3 x2*x3")
        assert ideal.format_gens() == ["x1*x2", "x2*x3"]

    def test_zero_ideal(self):
        ideal = parse_ideal_text("vars x1 x2\n")
        assert ideal.is_zero
        assert len(ideal) == 0

    def test_powers(self):
        assert make("x1", "x1^2 x1^3").format_gens() == ["x1^2"]

    def test_unit_rejected(self):
        with pytest.raises(UnitIdeal):
            make("x1 x2", "x1 1")

    def test_order_independent(self):
        ring = RingSpec.of(["a", "b", "c"])
        gens = [Monomial((1, 1, 0)), Monomial((0, 1, 1)), Monomial((1, 1, 1))]
        assert minimal_generators(ring, gens) == minimal_generators(ring, reversed(gens))

    def test_idempotent(self):
        ideal = make("x1 x2 x3 x4 x5", C5)
        assert minimal_generators(ideal.ring, ideal.gens) == ideal

    def test_canonical_order(self):
        ideal = make("x1 x2 x3 x4 x5", "x4*x5 x1*x2 x3*x4 x1*x5 x2*x3")
        assert ideal.format_gens() == ["x1*x2", "x1*x5", "x2*x3", "x3*x4", "x4*x5"]
        assert [m.exponents for m in ideal.gens] == sorted(
            (m.exponents for m in ideal.gens), reverse=True
        )


class TestIdealOperations:
    """Test colon, degrees, squarefree parts and bracket powers."""

    def test_colon_cycle(self):
        """(I(C_5) : x2) = (x1, x3, x4x5)."""
        ideal = make("x1 x2 x3 x4 x5", C5)
        x2 = ideal.ring.variable("x2")
        assert colon(ideal, x2) == make("x1 x2 x3 x4 x5", "x1 x3 x4*x5")

    def test_colon_membership(self):
        """m is in (I : c) exactly when mc is in I."""
        ideal = make("x1 x2 x3 x4 x5", C5)
        c = ideal.ring.variable("x2")
        quotient = colon(ideal, c)
        for exps in [(1, 0, 0, 0, 0), (0, 0, 0, 1, 1), (0, 0, 0, 1, 0), (0, 0, 0, 0, 1)]:
            m = Monomial(exps)
            assert quotient.contains(m) == ideal.contains(m * c)

    def test_colon_by_one(self):
        ideal = make("x1 x2 x3 x4 x5", C5)
        assert colon(ideal, ideal.ring.one()) == ideal

    def test_colon_by_member(self):
        ideal = make("x1 x2 x3 x4 x5", C5)
        with pytest.raises(UnitIdeal):
            colon(ideal, Monomial((1, 1, 0, 0, 1)))

    def test_colon_power(self):
        ideal = make("x1", "x1^2")
        assert colon(ideal, ideal.ring.variable("x1")) == make("x1", "x1")

    def test_var_degree(self):
        ideal = make("a b c d e", "a^2*b*c a*d b^3*c*d")
        assert var_degree(ideal, ideal.ring.index("a")) == 2
        assert var_degree(ideal, ideal.ring.index("b")) == 3
        assert var_degree(ideal, ideal.ring.index("e")) == 0

    def test_var_degree_zero_ideal(self):
        ideal = MonomialIdeal.zero(RingSpec.of(["x"]))
        with pytest.raises(ZeroIdeal):
            var_degree(ideal, 0)

    def test_squarefree_part(self):
        ideal = make("x1 x2 x3 x4", "x1^3*x2 x2*x3^2 x3^2*x4^4 x1^3*x4^4")
        assert squarefree_part(ideal) == make("x1 x2 x3 x4", "x1*x2 x2*x3 x3*x4 x1*x4")
        assert squarefree_part(squarefree_part(ideal)) == squarefree_part(ideal)
        assert squarefree_part(make("x1", "x1^3")) == make("x1", "x1")

    def test_bracket_power(self):
        ideal = make("x1 x2 x3", "x1*x2 x2*x3")
        assert bracket_power(ideal, 2) == make("x1 x2 x3", "x1^2*x2^2 x2^2*x3^2")
        assert bracket_power(ideal, 1) == ideal
        assert bracket_power(make("x1 x2", "x1 x2"), 3) == make("x1 x2", "x1^3 x2^3")

    def test_bracket_power_rejects_zero_exponent(self):
        with pytest.raises(InputError):
            bracket_power(make("x1", "x1"), 0)

    def test_sum_with_variables_and_extend(self):
        ideal = make("x1 x2 x3", "x1*x2 x2*x3")
        assert ideal_sum_with_variables(ideal, [1]) == make("x1 x2 x3", "x2")
        extended = extend_ring(ideal, ["y1"])
        assert extended.ring.variables == ("x1", "x2", "x3", "y1")
        assert extended.format_gens() == ["x1*x2", "x2*x3"]


class TestTermOrder:
    """Test lex orders and their completions."""

    def test_lex_compare(self):
        ring = RingSpec.of(["x1", "x2"])
        order = TermOrder.default(ring)
        assert order.greater(Monomial((1, 0)), Monomial((0, 5)))
        assert order.compare(Monomial((1, 1)), Monomial((1, 1))) == 0

    def test_custom_lex(self):
        ring = RingSpec.of(["x1", "x2", "x3", "x4", "x5"])
        order = TermOrder.lex(ring, ["x1", "x5", "x2", "x3", "x4"])
        assert order.sort_variables([1, 4, 0]) == (0, 4, 1)
        assert order.greater(Monomial((0, 0, 0, 0, 1)), Monomial((0, 3, 0, 0, 0)))

    def test_complete_default(self):
        """Chains first, remaining variables in descending index."""
        ring = RingSpec.of(["x1", "x2", "x3", "x4", "x5"])
        order = TermOrder.complete(ring, [["x1", "x5", "x2"]])
        assert order.names(ring) == ["x1", "x5", "x2", "x4", "x3"]

    def test_complete_strategies_respect_chains(self):
        ring = RingSpec.of([f"x{i}" for i in range(1, 9)])
        chains = [["x1", "x8", "x2"], ["x4", "x3", "x5"]]
        for strategy in CompletionStrategy:
            order = TermOrder.complete(ring, chains, strategy)
            for chain in chains:
                ranks = [order.rank(ring.index(name)) for name in chain]
                assert ranks == sorted(ranks)

    def test_complete_rejects_overlap(self):
        ring = RingSpec.of(["a", "b", "c"])
        with pytest.raises(InputError):
            TermOrder.complete(ring, [["a", "b"], ["b", "c"]])

    def test_not_permutation(self):
        with pytest.raises(InputError):
            TermOrder((0, 0, 1))


class TestLinearForm:
    """Test linear form parsing."""

    def test_parse(self):
        ring = RingSpec.of(["x1", "x2", "x5"])
        form = LinearForm.parse(ring, "x1 + x5 + x2")
        assert form.support == (0, 2, 1)
        assert form.format(ring) == "x1+x5+x2"

    def test_repeated_variable(self):
        ring = RingSpec.of(["x1", "x2"])
        with pytest.raises(InputError):
            LinearForm.parse(ring, "x1+x1")


class TestSerialization:
    """Test text and JSON formats."""

    def test_text_round_trip(self):
        text = "vars x1 x2 x3 x4 x5\ngens x1*x2 x1*x5 x2*x3 x3*x4 x4*x5\n"
        assert format_ideal_text(parse_ideal_text(text)) == text

    def test_comments_and_multiple_gens_lines(self):
        text = "# a path\nvars a b c\ngens a*b   # first edge\ngens b*c\n"
        assert parse_ideal_text(text) == make("a b c", "a*b b*c")

    def test_json_round_trip(self):
        ideal = make("a b c", "a^2*b b*c^3")
        data = json.loads(json.dumps(ideal_to_json(ideal)))
        assert data == {"vars": ["a", "b", "c"], "gens": [[2, 1, 0], [0, 1, 3]]}
        assert ideal_from_json(data) == ideal

    def test_parse_detects_json(self):
        assert parse_ideal('{"vars": ["x"], "gens": [[2]]}') == make("x", "x^2")

    def test_error_line_numbers(self):
        with pytest.raises(ParseError, match="line 2"):
            parse_ideal_text("vars x y\ngens x*z\n")
        with pytest.raises(ParseError, match="line 1"):
            parse_ideal_text("gens x\n")

    def test_missing_vars(self):
        with pytest.raises(ParseError):
            parse_ideal_text("# nothing\n")

    def test_bad_json_vector(self):
        with pytest.raises(ParseError):
            ideal_from_json({"vars": ["x", "y"], "gens": [[1]]})
        with pytest.raises(ParseError):
            ideal_from_json({"vars": ["x"], "gens": [[True]]})

    def test_parse_monomial(self):
        ring = RingSpec.of(["x1", "x2"])
        assert parse_monomial(ring, "x1*x2^3*x1") == Monomial((2, 3))
        with pytest.raises(ParseError):
            parse_monomial(ring, "x1**x2")

    def test_load_ideal_file(self, tmp_path):
        path = tmp_path / "c5.ideal"
        path.write_text(f"vars x1 x2 x3 x4 x5\ngens {C5}\n")
        assert load_ideal(path) == make("x1 x2 x3 x4 x5", C5)

    def test_load_missing_file(self, tmp_path):
        with pytest.raises(InputError):
            load_ideal(tmp_path / "absent.ideal")
