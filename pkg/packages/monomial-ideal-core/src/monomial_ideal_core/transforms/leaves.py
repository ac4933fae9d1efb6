"""
Leaves and leaf pairs of monomial ideals.
"""

from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass

from ..models import Monomial, MonomialIdeal, RingSpec

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class LeafPair:
    """
    Witness (a, b, z, w) that the leaves a and b form a leaf pair.

    z divides the generator of a without a, w divides the generator of b
    without b, gcd(z, w) = 1 and zw lies in the ideal.
    """

    a: int
    b: int
    z: Monomial
    w: Monomial

    def format(self, ring: RingSpec) -> str:
        return (
            f"({ring.name(self.a)}, {ring.name(self.b)}; "
            f"z={self.z.format(ring)}, w={self.w.format(ring)})"
        )


def leaf_generators(ideal: MonomialIdeal) -> dict[int, Monomial]:
    """Map every leaf to the unique generator it divides."""
    ideal.require_nonzero("leaf_generators")
    result = {}
    for i in range(ideal.ring.n):
        divisible = ideal.divisible_by(i)
        if len(divisible) == 1:
            result[i] = divisible[0]
    return result


def find_leaves(ideal: MonomialIdeal) -> tuple[int, ...]:
    """Variables dividing exactly one minimal generator."""
    return tuple(sorted(leaf_generators(ideal)))


def _divisors_avoiding(m: Monomial, index: int) -> list[Monomial]:
    ranges = [range(e + 1) if i != index else range(1) for i, e in enumerate(m.exponents)]
    return [Monomial(exps) for exps in itertools.product(*ranges)]


def find_leaf_pairs(ideal: MonomialIdeal) -> list[LeafPair]:
    """All leaf-pair witnesses, both orientations, over divisors of the leaf generators.

    Returns:
        LeafPair records sorted by (a, b, z, w)
    """
    leaves = leaf_generators(ideal)
    found = []
    for a, b in itertools.permutations(sorted(leaves), 2):
        m1, m2 = leaves[a], leaves[b]
        if m1 == m2:
            continue
        ws = _divisors_avoiding(m2, b)
        for z in _divisors_avoiding(m1, a):
            for w in ws:
                if z.is_coprime(w) and ideal.contains(z * w):
                    found.append(LeafPair(a, b, z, w))
    found.sort(key=lambda p: (p.a, p.b, p.z, p.w))
    logger.debug("Found %d leaf-pair witnesses among %d leaves", len(found), len(leaves))
    return found


def is_leaf_pair(ideal: MonomialIdeal, a: int, b: int) -> bool:
    return any(p.a == a and p.b == b for p in find_leaf_pairs(ideal))
