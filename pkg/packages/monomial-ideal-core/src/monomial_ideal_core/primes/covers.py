"""
Minimal vertex covers of hypergraphs given as bitmask edges.

Minimal primes of a monomial ideal are exactly the minimal transversals of
the generator supports, so everything here works on plain integer bitmasks
(bit i set = variable i present).
"""

from __future__ import annotations

import logging
from typing import Iterable

from ..errors import BudgetExceeded
from ..models import MonomialIdeal, MonomialPrime, sorted_primes

logger = logging.getLogger(__name__)


def _bits(mask: int) -> list[int]:
    bits = []
    while mask:
        low = mask & -mask
        bits.append(low.bit_length() - 1)
        mask ^= low
    return bits


def minimal_edges(edges: Iterable[int]) -> list[int]:
    """Drop duplicate edges and edges containing another edge."""
    kept: list[int] = []
    for edge in sorted(set(edges), key=lambda e: (bin(e).count("1"), e)):
        if not any(k & edge == k for k in kept):
            kept.append(edge)
    return kept


class CoverEnumerator:
    """
    Branch-and-bound enumeration of minimal transversals.

    Branching picks the uncovered edge with the fewest admissible vertices and
    tries each of them in turn; vertices tried by earlier siblings are
    forbidden in later ones, so every minimal cover is produced exactly once.
    A partial cover is abandoned as soon as one of its vertices has lost every
    edge it could still cover alone.
    """

    # Brute-force reference refuses hypergraphs with more vertices than this
    BRUTE_FORCE_LIMIT = 20

    def __init__(self, edges: Iterable[int]) -> None:
        """
        Args:
            edges: Nonzero bitmask hyperedges
        """
        self.edges = minimal_edges(edges)
        if any(edge == 0 for edge in self.edges):
            raise ValueError("empty hyperedge has no transversal")
        self.nodes_visited = 0

    def enumerate(self) -> list[int]:
        """All minimal covers as bitmasks, ascending by (size, mask)."""
        self.nodes_visited = 0
        found: list[int] = []
        if self.edges:
            self._branch(0, 0, found)
        logger.debug(
            "Enumerated %d minimal covers of %d edges (%d search nodes)",
            len(found), len(self.edges), self.nodes_visited,
        )
        return sorted(found, key=lambda m: (bin(m).count("1"), m))

    def _branch(self, chosen: int, forbidden: int, found: list[int]) -> None:
        self.nodes_visited += 1
        target = 0
        best = -1
        for edge in self.edges:
            if edge & chosen:
                continue
            allowed = edge & ~forbidden
            if not allowed:
                return
            size = bin(allowed).count("1")
            if best < 0 or size < best:
                target, best = allowed, size
                if size == 1:
                    break

        if best < 0:
            found.append(chosen)
            return

        for v in _bits(target):
            bit = 1 << v
            extended = chosen | bit
            if self._keeps_private_edges(extended):
                self._branch(extended, forbidden, found)
            forbidden |= bit

    def _keeps_private_edges(self, chosen: int) -> bool:
        # Chosen only grows, so an edge meeting it twice is never private again.
        private = 0
        for edge in self.edges:
            hit = edge & chosen
            if hit and hit & (hit - 1) == 0:
                private |= hit
        return private == chosen

    def brute_force(self) -> list[int]:
        """Reference enumeration over every vertex subset of the edge union."""
        universe = 0
        for edge in self.edges:
            universe |= edge
        vertices = _bits(universe)
        if len(vertices) > self.BRUTE_FORCE_LIMIT:
            raise BudgetExceeded("brute_force_vertices", self.BRUTE_FORCE_LIMIT, len(vertices))

        covers = []
        for subset in range(1 << len(vertices)):
            mask = 0
            for j, v in enumerate(vertices):
                if subset >> j & 1:
                    mask |= 1 << v
            if all(edge & mask for edge in self.edges):
                covers.append(mask)
        minimal = [c for c in covers if not any(o != c and o & c == o for o in covers)]
        return sorted(minimal, key=lambda m: (bin(m).count("1"), m))


def minimal_primes(ideal: MonomialIdeal) -> list[MonomialPrime]:
    """Min(R/I) as the minimal transversals of the generator supports.

    Args:
        ideal: Nonzero monomial ideal

    Returns:
        Minimal primes in canonical order (size, then sorted indices)

    Raises:
        ZeroIdeal: Min(R/I) is not defined for I = 0 here
    """
    ideal.require_nonzero("minimal_primes")
    enumerator = CoverEnumerator(g.support_mask() for g in ideal.gens)
    return sorted_primes(MonomialPrime.from_mask(mask) for mask in enumerator.enumerate())
