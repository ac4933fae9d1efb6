"""
Polynomial ring, monomial and term order models.

A RingSpec fixes the ordered variable list; every Monomial is an exponent
vector indexed by that list. Monomials do not carry their ring, ideals do.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Sequence

from ..errors import InputError

VARIABLE_NAME = re.compile(r"^[A-Za-z][A-Za-z0-9_]*$")


@dataclass(frozen=True)
class RingSpec:
    """
    Polynomial ring k[x_1, ..., x_n] given by its ordered variable names.

    Attributes:
        variables: Distinct variable names; list order is the index order
    """

    variables: tuple[str, ...]

    def __post_init__(self) -> None:
        if not self.variables:
            raise InputError("a ring needs at least one variable")
        seen: set[str] = set()
        for name in self.variables:
            if not VARIABLE_NAME.match(name):
                raise InputError(f"invalid variable name {name!r}")
            if name in seen:
                raise InputError(f"duplicate variable name {name!r}")
            seen.add(name)

    @classmethod
    def of(cls, names: Iterable[str]) -> RingSpec:
        return cls(tuple(names))

    @property
    def n(self) -> int:
        return len(self.variables)

    def index(self, name: str) -> int:
        """Index of a variable name; raises InputError for unknown names."""
        try:
            return self.variables.index(name)
        except ValueError:
            raise InputError(f"unknown variable {name!r}") from None

    def name(self, index: int) -> str:
        return self.variables[index]

    def variable(self, name: str) -> Monomial:
        """The monomial consisting of one variable."""
        return Monomial.variable(self.n, self.index(name))

    def one(self) -> Monomial:
        return Monomial.one(self.n)

    def extend(self, names: Iterable[str]) -> RingSpec:
        """Ring with the extra variables appended after the existing ones."""
        return RingSpec(self.variables + tuple(names))


@dataclass(frozen=True, order=True)
class Monomial:
    """
    Monomial as a vector of natural exponents.

    The all-zero vector is the monomial 1. Ordering of Monomial instances is
    the lexicographic order of the exponent vectors, used only for canonical
    sorting of generating sets (not a term order).
    """

    exponents: tuple[int, ...]

    def __post_init__(self) -> None:
        if any(e < 0 for e in self.exponents):
            raise InputError(f"negative exponent in {self.exponents}")

    @classmethod
    def one(cls, n: int) -> Monomial:
        return cls((0,) * n)

    @classmethod
    def variable(cls, n: int, index: int, power: int = 1) -> Monomial:
        exps = [0] * n
        exps[index] = power
        return cls(tuple(exps))

    @classmethod
    def from_support(cls, n: int, indices: Iterable[int]) -> Monomial:
        """Squarefree monomial with the given variable indices."""
        exps = [0] * n
        for i in indices:
            exps[i] = 1
        return cls(tuple(exps))

    def __len__(self) -> int:
        return len(self.exponents)

    def __getitem__(self, index: int) -> int:
        return self.exponents[index]

    def __mul__(self, other: Monomial) -> Monomial:
        return Monomial(tuple(a + b for a, b in zip(self.exponents, other.exponents)))

    def __pow__(self, power: int) -> Monomial:
        return Monomial(tuple(a * power for a in self.exponents))

    @property
    def degree(self) -> int:
        return sum(self.exponents)

    @property
    def is_one(self) -> bool:
        return not any(self.exponents)

    @property
    def is_squarefree(self) -> bool:
        return all(e <= 1 for e in self.exponents)

    def support(self) -> tuple[int, ...]:
        """Indices of the variables dividing this monomial."""
        return tuple(i for i, e in enumerate(self.exponents) if e)

    def support_mask(self) -> int:
        """Support as a bitmask, bit i set when variable i divides."""
        mask = 0
        for i, e in enumerate(self.exponents):
            if e:
                mask |= 1 << i
        return mask

    def divides(self, other: Monomial) -> bool:
        return all(a <= b for a, b in zip(self.exponents, other.exponents))

    def lcm(self, other: Monomial) -> Monomial:
        return Monomial(tuple(max(a, b) for a, b in zip(self.exponents, other.exponents)))

    def gcd(self, other: Monomial) -> Monomial:
        return Monomial(tuple(min(a, b) for a, b in zip(self.exponents, other.exponents)))

    def is_coprime(self, other: Monomial) -> bool:
        return all(not (a and b) for a, b in zip(self.exponents, other.exponents))

    def quotient(self, other: Monomial) -> Monomial:
        """Exact quotient self / other; other must divide self."""
        if not other.divides(self):
            raise ValueError("quotient of non-divisible monomials")
        return Monomial(tuple(a - b for a, b in zip(self.exponents, other.exponents)))

    def colon(self, other: Monomial) -> Monomial:
        """self / gcd(self, other)."""
        return Monomial(tuple(max(a - b, 0) for a, b in zip(self.exponents, other.exponents)))

    def radical(self) -> Monomial:
        """Squarefree part: every exponent clamped to at most one."""
        return Monomial(tuple(min(e, 1) for e in self.exponents))

    def replace(self, index: int, exponent: int) -> Monomial:
        exps = list(self.exponents)
        exps[index] = exponent
        return Monomial(tuple(exps))

    def format(self, ring: RingSpec) -> str:
        """Render as `x1*x2^3`; the monomial 1 renders as `1`."""
        parts = []
        for name, e in zip(ring.variables, self.exponents):
            if e == 1:
                parts.append(name)
            elif e > 1:
                parts.append(f"{name}^{e}")
        return "*".join(parts) if parts else "1"


class CompletionStrategy(str, Enum):
    """Ways to extend order chains to a total lex order."""
    CHAINS_THEN_DESCENDING = "chains_then_descending"
    CHAINS_THEN_ASCENDING = "chains_then_ascending"
    REVERSED_CHAINS = "reversed_chains"
    REST_FIRST = "rest_first"


@dataclass(frozen=True)
class TermOrder:
    """
    Lexicographic term order given by a variable precedence.

    Attributes:
        precedence: Permutation of variable indices, highest variable first
    """

    precedence: tuple[int, ...]

    def __post_init__(self) -> None:
        if sorted(self.precedence) != list(range(len(self.precedence))):
            raise InputError(f"term order precedence {self.precedence} is not a permutation")

    @classmethod
    def default(cls, ring: RingSpec) -> TermOrder:
        """Lex with x_1 > x_2 > ... in ring order."""
        return cls(tuple(range(ring.n)))

    @classmethod
    def lex(cls, ring: RingSpec, names: Sequence[str]) -> TermOrder:
        """Lex order from a full list of variable names, highest first."""
        if len(names) != ring.n:
            raise InputError(f"order lists {len(names)} variables, ring has {ring.n}")
        return cls(tuple(ring.index(name) for name in names))

    @classmethod
    def complete(
        cls,
        ring: RingSpec,
        chains: Sequence[Sequence[str]],
        strategy: CompletionStrategy = CompletionStrategy.CHAINS_THEN_DESCENDING,
    ) -> TermOrder:
        """Extend disjoint chains `a > b > c` to a total lex order.

        Args:
            ring: Ring the order lives on
            chains: Variable name chains, each listed highest first
            strategy: Where unconstrained variables go and how chains are laid out

        Returns:
            TermOrder respecting every chain
        """
        placed: list[int] = []
        seen: set[int] = set()
        ordered_chains = list(chains)
        if strategy is CompletionStrategy.REVERSED_CHAINS:
            ordered_chains.reverse()
        for chain in ordered_chains:
            for name in chain:
                index = ring.index(name)
                if index in seen:
                    raise InputError(f"variable {name!r} appears in more than one order chain")
                seen.add(index)
                placed.append(index)

        rest = [i for i in range(ring.n) if i not in seen]
        if strategy is CompletionStrategy.CHAINS_THEN_ASCENDING:
            return cls(tuple(placed + rest))
        rest.reverse()
        if strategy is CompletionStrategy.REST_FIRST:
            return cls(tuple(rest + placed))
        return cls(tuple(placed + rest))

    def key(self, m: Monomial) -> tuple[int, ...]:
        """Sort key: larger key means larger monomial."""
        return tuple(m.exponents[i] for i in self.precedence)

    def compare(self, m1: Monomial, m2: Monomial) -> int:
        k1, k2 = self.key(m1), self.key(m2)
        return (k1 > k2) - (k1 < k2)

    def greater(self, m1: Monomial, m2: Monomial) -> bool:
        return self.key(m1) > self.key(m2)

    def rank(self, index: int) -> int:
        """Position of a variable in the precedence (0 is highest)."""
        return self.precedence.index(index)

    def sort_variables(self, indices: Iterable[int]) -> tuple[int, ...]:
        """Variables sorted highest first."""
        return tuple(sorted(indices, key=self.rank))

    def names(self, ring: RingSpec) -> list[str]:
        return [ring.name(i) for i in self.precedence]
