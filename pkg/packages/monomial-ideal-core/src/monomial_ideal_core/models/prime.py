"""
MonomialPrime data model.

Monomial primes are generated by variables, so a prime is just a set of
variable indices.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .ring import Monomial, RingSpec


@dataclass(frozen=True)
class MonomialPrime:
    """
    Prime ideal (x_i1, ..., x_ir) generated by variables.

    Attributes:
        vars: Variable indices generating the prime
    """

    vars: frozenset[int]

    @classmethod
    def of(cls, indices: Iterable[int]) -> MonomialPrime:
        return cls(frozenset(indices))

    @classmethod
    def from_names(cls, ring: RingSpec, names: Iterable[str]) -> MonomialPrime:
        return cls(frozenset(ring.index(name) for name in names))

    @classmethod
    def from_mask(cls, mask: int) -> MonomialPrime:
        indices = []
        i = 0
        while mask:
            if mask & 1:
                indices.append(i)
            mask >>= 1
            i += 1
        return cls(frozenset(indices))

    @property
    def mask(self) -> int:
        result = 0
        for i in self.vars:
            result |= 1 << i
        return result

    def __len__(self) -> int:
        return len(self.vars)

    def __contains__(self, index: object) -> bool:
        return index in self.vars

    def contains_monomial(self, m: Monomial) -> bool:
        """A monomial lies in the prime iff one of its variables does."""
        return any(m.exponents[i] for i in self.vars)

    def issubset(self, other: MonomialPrime) -> bool:
        return self.vars <= other.vars

    def union(self, indices: Iterable[int]) -> MonomialPrime:
        return MonomialPrime(self.vars | frozenset(indices))

    def sorted_vars(self) -> tuple[int, ...]:
        return tuple(sorted(self.vars))

    def sort_key(self) -> tuple[int, tuple[int, ...]]:
        """Canonical order for listings: by size, then by sorted indices."""
        return (len(self.vars), self.sorted_vars())

    def names(self, ring: RingSpec) -> list[str]:
        return [ring.name(i) for i in self.sorted_vars()]

    def format(self, ring: RingSpec) -> str:
        return "(" + ", ".join(self.names(ring)) + ")"


def sorted_primes(primes: Iterable[MonomialPrime]) -> list[MonomialPrime]:
    return sorted(set(primes), key=MonomialPrime.sort_key)
