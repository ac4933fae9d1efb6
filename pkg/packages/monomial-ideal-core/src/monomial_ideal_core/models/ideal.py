"""
MonomialIdeal and LinearForm data models.

A MonomialIdeal always stores its canonical minimal generating set G(I),
in decreasing lex order of exponent vectors, so equal ideals compare and hash equal.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from ..errors import InputError, UnitIdeal, ZeroIdeal
from .ring import Monomial, RingSpec

logger = logging.getLogger(__name__)


def _minimalize(gens: Iterable[Monomial]) -> tuple[Monomial, ...]:
    # A proper divisor has strictly smaller degree than its multiple
    kept: list[Monomial] = []
    for m in sorted(set(gens), key=lambda g: (g.degree, g.exponents)):
        if not any(k.divides(m) for k in kept):
            kept.append(m)
    return tuple(sorted(kept, reverse=True))


@dataclass(frozen=True)
class MonomialIdeal:
    """
    Monomial ideal with its minimal generators.

    Attributes:
        ring: Ambient polynomial ring
        gens: Minimal generators, exponent vectors in decreasing lex order; empty for zero
    """

    ring: RingSpec
    gens: tuple[Monomial, ...]

    @classmethod
    def from_gens(cls, ring: RingSpec, gens: Iterable[Monomial]) -> MonomialIdeal:
        """Build an ideal from any generating set (see minimal_generators)."""
        return minimal_generators(ring, gens)

    @classmethod
    def zero(cls, ring: RingSpec) -> MonomialIdeal:
        return cls(ring, ())

    @property
    def is_zero(self) -> bool:
        return not self.gens

    @property
    def is_squarefree(self) -> bool:
        return all(m.is_squarefree for m in self.gens)

    def __len__(self) -> int:
        return len(self.gens)

    def __iter__(self) -> Iterator[Monomial]:
        return iter(self.gens)

    def contains(self, m: Monomial) -> bool:
        """Membership: some generator divides m."""
        return any(g.divides(m) for g in self.gens)

    def require_nonzero(self, operation: str) -> None:
        if self.is_zero:
            raise ZeroIdeal(f"{operation} is undefined for the zero ideal")

    def lcm(self) -> Monomial:
        """lcm of all generators (1 for the zero ideal)."""
        result = self.ring.one()
        for g in self.gens:
            result = result.lcm(g)
        return result

    def used_variables(self) -> tuple[int, ...]:
        return self.lcm().support()

    def divisible_by(self, index: int) -> list[Monomial]:
        """Generators divisible by variable `index`."""
        return [g for g in self.gens if g.exponents[index]]

    def format_gens(self) -> list[str]:
        return [g.format(self.ring) for g in self.gens]

    def __str__(self) -> str:
        return "(" + ", ".join(self.format_gens()) + ")"


def minimal_generators(ring: RingSpec, gens: Iterable[Monomial]) -> MonomialIdeal:
    """Canonical minimal generating set of the ideal generated by `gens`.

    Args:
        ring: Ring of the generators
        gens: Any finite set of monomials over `ring`

    Returns:
        MonomialIdeal whose generators form the inclusion-minimal antichain

    Raises:
        UnitIdeal: if 1 is among the generators
    """
    gens = list(gens)
    for m in gens:
        if len(m) != ring.n:
            raise InputError(f"monomial of length {len(m)} in a ring with {ring.n} variables")
        if m.is_one:
            raise UnitIdeal("the unit ideal is not a proper monomial ideal")
    return MonomialIdeal(ring, _minimalize(gens))


def colon(ideal: MonomialIdeal, c: Monomial) -> MonomialIdeal:
    """(I : c), generated by M / gcd(M, c) for M in G(I).

    Raises:
        UnitIdeal: if c lies in I, since (I : c) is then the whole ring
    """
    return minimal_generators(ideal.ring, (m.colon(c) for m in ideal.gens))


def var_degree(ideal: MonomialIdeal, index: int) -> int:
    """d_x(I): the largest exponent of variable `index` over G(I)."""
    ideal.require_nonzero("var_degree")
    return max(m.exponents[index] for m in ideal.gens)


def var_degrees(ideal: MonomialIdeal) -> tuple[int, ...]:
    """d_x(I) for every variable in ring order (zeros for the zero ideal)."""
    return ideal.lcm().exponents


def squarefree_part(ideal: MonomialIdeal) -> MonomialIdeal:
    """Ideal generated by the squarefree parts of the generators."""
    ideal.require_nonzero("squarefree_part")
    return minimal_generators(ideal.ring, (m.radical() for m in ideal.gens))


def bracket_power(ideal: MonomialIdeal, n: int) -> MonomialIdeal:
    """I^[n], generated by the n-th powers of the generators."""
    ideal.require_nonzero("bracket_power")
    if n < 1:
        raise InputError(f"bracket power exponent must be >= 1, got {n}")
    return minimal_generators(ideal.ring, (m**n for m in ideal.gens))


def ideal_sum_with_variables(ideal: MonomialIdeal, indices: Iterable[int]) -> MonomialIdeal:
    """(I, x_i1, ..., x_ik)."""
    n = ideal.ring.n
    extra = [Monomial.variable(n, i) for i in indices]
    return minimal_generators(ideal.ring, list(ideal.gens) + extra)


def extend_ring(ideal: MonomialIdeal, names: Sequence[str]) -> MonomialIdeal:
    """The same generators viewed in a ring with extra trailing variables."""
    ring = ideal.ring.extend(names)
    pad = (0,) * len(names)
    return MonomialIdeal(ring, tuple(Monomial(m.exponents + pad) for m in ideal.gens))


@dataclass(frozen=True)
class LinearForm:
    """
    Coefficient-one sum of distinct variables, e.g. x1 + x5 + x2.

    Attributes:
        support: Variable indices in the order the form was written
    """

    support: tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.support:
            raise InputError("a linear form needs at least one variable")
        if len(set(self.support)) != len(self.support):
            raise InputError(f"repeated variable in linear form {self.support}")

    @classmethod
    def parse(cls, ring: RingSpec, text: str) -> LinearForm:
        """Parse `x1+x5+x2` (whitespace allowed)."""
        names = [part.strip() for part in text.split("+")]
        if any(not name for name in names):
            raise InputError(f"malformed linear form {text!r}")
        return cls(tuple(ring.index(name) for name in names))

    @classmethod
    def of(cls, ring: RingSpec, names: Iterable[str]) -> LinearForm:
        return cls(tuple(ring.index(name) for name in names))

    def check_ring(self, ring: RingSpec) -> None:
        if any(i < 0 or i >= ring.n for i in self.support):
            raise InputError(
                f"linear form {self.support} does not fit a ring with {ring.n} variables"
            )

    def names(self, ring: RingSpec) -> list[str]:
        return [ring.name(i) for i in self.support]

    def format(self, ring: RingSpec) -> str:
        return "+".join(self.names(ring))

    def __len__(self) -> int:
        return len(self.support)
