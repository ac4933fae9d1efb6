"""
Star neighbors and the decomposition of embedded associated primes.

N*(w) collects the variables z != w sharing a generator M with w in which w
does not reach its top degree d_w(I). Every embedded prime Q of R/I is a
minimal prime Q' plus variables each lying in some N*(w).
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Any, Iterable

from ..errors import NoDecomposition, NotEmbedded, PreconditionViolated
from ..models import MonomialIdeal, MonomialPrime, RingSpec, var_degrees
from .associated import associated_primes
from .covers import minimal_primes

logger = logging.getLogger(__name__)


def star_neighbors(ideal: MonomialIdeal, w: int) -> frozenset[int]:
    """N*(w) as a set of variable indices."""
    ideal.require_nonzero("star_neighbors")
    top = var_degrees(ideal)[w]
    result: set[int] = set()
    for m in ideal.gens:
        if 0 < m.exponents[w] < top:
            result.update(i for i in m.support() if i != w)
    return frozenset(result)


def star_neighbor_table(ideal: MonomialIdeal) -> dict[int, frozenset[int]]:
    """Nonempty N*(w) for every variable w."""
    table = {w: star_neighbors(ideal, w) for w in range(ideal.ring.n)}
    return {w: zs for w, zs in table.items() if zs}


def has_no_embedded_hypothesis(ideal: MonomialIdeal) -> bool:
    """True when every variable appears in G(I) only at its top degree d_x(I)."""
    ideal.require_nonzero("has_no_embedded_hypothesis")
    top = var_degrees(ideal)
    return all(e in (0, top[i]) for m in ideal.gens for i, e in enumerate(m.exponents))


def regular_form_family_condition(ideal: MonomialIdeal, b0: int, others: Iterable[int]) -> bool:
    """Covering condition on b_0, ..., b_t for f = b_0 + ... + b_t.

    Every generator divisible by b_0 must be divisible by some other b_i. On
    ideals satisfying has_no_embedded_hypothesis, such an f is regular on R/I.
    """
    rest = list(others)
    if b0 in rest or len(set(rest)) != len(rest):
        return False
    return all(
        any(m.exponents[b] for b in rest) for m in ideal.gens if m.exponents[b0]
    )


@dataclass(frozen=True)
class EmbeddedDecomposition:
    """
    Q = (Q', z_1, ..., z_t) with every z_j in N*(w_j).

    Attributes:
        minimal_prime: Q', a minimal prime contained in Q
        extras: Pairs (z, w) with z in Q \\ Q' and z in N*(w), sorted by z
    """

    minimal_prime: MonomialPrime
    extras: tuple[tuple[int, int], ...]

    @property
    def prime(self) -> MonomialPrime:
        return self.minimal_prime.union(z for z, _ in self.extras)

    def extra_variables(self) -> tuple[int, ...]:
        return tuple(z for z, _ in self.extras)

    def to_json(self, ring: RingSpec) -> dict[str, Any]:
        return {
            "min_prime": self.minimal_prime.names(ring),
            "extras": [{"z": ring.name(z), "witness": ring.name(w)} for z, w in self.extras],
        }

    def format(self, ring: RingSpec) -> str:
        inner = self.minimal_prime.names(ring) + [ring.name(z) for z, _ in self.extras]
        return "(" + ", ".join(inner) + ")"


def _label_extras(
    extras: Iterable[int], table: dict[int, frozenset[int]]
) -> tuple[tuple[int, int], ...] | None:
    labels = []
    for z in sorted(extras):
        witnesses = [w for w in sorted(table) if z in table[w]]
        if not witnesses:
            return None
        labels.append((z, witnesses[0]))
    return tuple(labels)


def all_decompositions(ideal: MonomialIdeal, prime: MonomialPrime) -> list[EmbeddedDecomposition]:
    """Every minimal prime Q' inside `prime` whose complement is star-labelled.

    Ordered by number of extras, then by the sorted indices of Q'. Each extra
    carries its least-index witness.
    """
    table = star_neighbor_table(ideal)
    found = []
    for q in minimal_primes(ideal):
        if not (q.vars < prime.vars):
            continue
        labels = _label_extras(prime.vars - q.vars, table)
        if labels is not None:
            found.append(EmbeddedDecomposition(q, labels))
    found.sort(key=lambda d: (len(d.extras), d.minimal_prime.sorted_vars()))
    return found


def embedded_decomposition(ideal: MonomialIdeal, prime: MonomialPrime) -> EmbeddedDecomposition:
    """Decompose an embedded associated prime as a minimal prime plus star neighbors.

    Args:
        ideal: Nonzero monomial ideal
        prime: Q, an embedded associated prime of R/I

    Returns:
        The first decomposition in all_decompositions order

    Raises:
        PreconditionViolated: Q is not associated to R/I
        NotEmbedded: Q is a minimal prime
        NoDecomposition: no star-neighbor labelling exists for Q
    """
    if prime in minimal_primes(ideal):
        raise NotEmbedded(f"{prime.format(ideal.ring)} is a minimal prime of {ideal}")
    if prime not in associated_primes(ideal):
        raise PreconditionViolated(
            "Q in Ass(R/I)", f"{prime.format(ideal.ring)} is not associated to {ideal}"
        )
    candidates = all_decompositions(ideal, prime)
    if not candidates:
        logger.error("No star-neighbor decomposition of %s for %s", prime.format(ideal.ring), ideal)
        raise NoDecomposition(
            f"embedded prime {prime.format(ideal.ring)} of {ideal} has no decomposition"
        )
    return candidates[0]
