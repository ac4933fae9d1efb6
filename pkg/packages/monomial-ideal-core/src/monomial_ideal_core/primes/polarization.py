"""
Polarization of monomial ideals.

Each variable x with d_x(I) = d > 0 is replaced by d copies x_1, ..., x_d and
x^a becomes x_1 * ... * x_a. Variables not occurring in G(I) are dropped from
the target ring.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass

from ..models import Monomial, MonomialIdeal, MonomialPrime, RingSpec, var_degrees

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class PolarizationMap:
    """
    Correspondence between source variables and their polarized copies.

    Attributes:
        source: Ring of the original ideal
        target: Ring of the polarization
        origin: For every target index, the pair (source index, copy number j >= 1)
    """

    source: RingSpec
    target: RingSpec
    origin: tuple[tuple[int, int], ...]

    def copies(self, source_index: int) -> int:
        return sum(1 for i, _ in self.origin if i == source_index)

    def target_index(self, source_index: int, copy: int) -> int:
        return self.origin.index((source_index, copy))

    def polarize_monomial(self, m: Monomial) -> Monomial:
        exps = [0] * self.target.n
        for t, (i, j) in enumerate(self.origin):
            if m.exponents[i] >= j:
                exps[t] = 1
        return Monomial(tuple(exps))

    def depolarize(self, prime: MonomialPrime) -> MonomialPrime:
        """Drop copy numbers: (x_{1,1}, x_{1,2}, x_{3,1}) becomes (x1, x3)."""
        return MonomialPrime.of(self.origin[t][0] for t in prime.vars)


def polarize(ideal: MonomialIdeal) -> tuple[MonomialIdeal, PolarizationMap]:
    """Squarefree polarization of `ideal` and the map back to its ring.

    Raises:
        ZeroIdeal: the zero ideal has nothing to polarize
    """
    ideal.require_nonzero("polarize")
    ring = ideal.ring
    origin: list[tuple[int, int]] = []
    names: list[str] = []
    for i, degree in enumerate(var_degrees(ideal)):
        for j in range(1, degree + 1):
            origin.append((i, j))
            names.append(f"{ring.name(i)}_{j}")

    pmap = PolarizationMap(ring, RingSpec(tuple(names)), tuple(origin))
    gens = tuple(sorted((pmap.polarize_monomial(m) for m in ideal.gens), reverse=True))
    # The image of a minimal generating set stays minimal
    polarized = MonomialIdeal(pmap.target, gens)
    logger.debug("Polarized %d variables into %d", ring.n, pmap.target.n)
    return polarized, pmap


def depolarize(prime: MonomialPrime, pmap: PolarizationMap) -> MonomialPrime:
    return pmap.depolarize(prime)
