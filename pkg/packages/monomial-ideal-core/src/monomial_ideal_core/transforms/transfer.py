"""
Minimal-prime transfer checks between I and I_1 = ini(I, f).

Each case checks one transfer statement on a concrete ideal:

- leaf: a is a leaf with ab | M; every Q in Min(I_1) is (P, a), P in Min(I)
- leaf_pair: a, b leaf pair; every Q in Min(I_1) is (P, a) or (P, b)
- leaf_pair_converse: edge ideal with leaf pair a, b; every P in Min(I) gives
  (P, a) in Min(I_1) when a is not in P and (P, b) otherwise
- trinomial: G(I) = {ab, ac, M_1, ...} with a only in ab and ac and
  d_b = d_c = 1; every Q in Min(I_1) is (P, a) with c in P or (P, b) with c not in P
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from enum import Enum

from ..errors import PreconditionViolated
from ..groebner import initial_ideal
from ..models import LinearForm, Monomial, MonomialIdeal, MonomialPrime, TermOrder, var_degrees
from ..primes import minimal_primes
from ..settings import Budgets
from .initial_forms import check_trinomial_conditions, ini_binomial, ini_trinomial
from .leaves import is_leaf_pair, leaf_generators

logger = logging.getLogger(__name__)


class TransferCase(str, Enum):
    """Transfer statements that can be checked."""
    LEAF = "leaf"
    LEAF_PAIR = "leaf_pair"
    LEAF_PAIR_CONVERSE = "leaf_pair_converse"
    TRINOMIAL = "trinomial"


@dataclass
class TransferReport:
    """
    Outcome of one transfer check.

    Attributes:
        case: Which transfer statement was checked
        checked_primes: Number of primes examined
        violations: Human-readable description of every failing prime
        engine: "transform" or "buchberger", whichever produced I_1
    """

    case: TransferCase
    checked_primes: int = 0
    violations: list[str] = field(default_factory=list)
    engine: str = "transform"

    @property
    def holds(self) -> bool:
        return not self.violations


def _is_edge_ideal(ideal: MonomialIdeal) -> bool:
    return all(m.is_squarefree and m.degree == 2 for m in ideal.gens)


def _check_hypotheses(
    ideal: MonomialIdeal, case: TransferCase, a: int, b: int, c: int | None
) -> None:
    ring = ideal.ring
    leaves = leaf_generators(ideal)
    if case is TransferCase.LEAF:
        if a not in leaves or not leaves[a].exponents[b]:
            raise PreconditionViolated(
                "leaf", f"{ring.name(a)} is not a leaf whose generator has {ring.name(b)}"
            )
        return
    if case in (TransferCase.LEAF_PAIR, TransferCase.LEAF_PAIR_CONVERSE):
        if not is_leaf_pair(ideal, a, b):
            raise PreconditionViolated(
                "leaf_pair", f"{ring.name(a)}, {ring.name(b)} is not a leaf pair"
            )
        if case is TransferCase.LEAF_PAIR_CONVERSE and not _is_edge_ideal(ideal):
            raise PreconditionViolated("edge_ideal", "converse transfer needs an edge ideal")
        return

    if c is None:
        raise PreconditionViolated("trinomial", "the trinomial case needs a third variable c")
    n = ring.n
    ab = Monomial.from_support(n, (a, b))
    ac = Monomial.from_support(n, (a, c))
    if ab not in ideal.gens or ac not in ideal.gens:
        raise PreconditionViolated("trinomial", "G(I) must contain ab and ac")
    if len(ideal.divisible_by(a)) != 2:
        raise PreconditionViolated("trinomial", f"{ring.name(a)} divides a third generator")
    degrees = var_degrees(ideal)
    if degrees[b] != 1 or degrees[c] != 1:
        raise PreconditionViolated("trinomial", "d_b(I) and d_c(I) must be 1")
    check_trinomial_conditions(ideal, a, b, c)


def check_min_prime_transfer(
    ideal: MonomialIdeal,
    case: TransferCase,
    a: int,
    b: int,
    c: int | None = None,
    *,
    use_oracle: bool = False,
    budgets: Budgets | None = None,
) -> TransferReport:
    """Verify one transfer statement on `ideal`, prime by prime.

    Args:
        ideal: Nonzero monomial ideal satisfying the case hypotheses
        case: Which statement to check
        a: Leading variable of the linear form
        b: Second variable
        c: Third variable (trinomial case only)
        use_oracle: Compute I_1 with Buchberger instead of the closed form
        budgets: Budgets for the Buchberger run

    Returns:
        TransferReport listing every violation

    Raises:
        PreconditionViolated: the case hypotheses do not hold
    """
    ring = ideal.ring
    ideal.require_nonzero("check_min_prime_transfer")
    _check_hypotheses(ideal, case, a, b, c)

    support = (a, b) if c is None or case is not TransferCase.TRINOMIAL else (a, b, c)
    report = TransferReport(case, engine="buchberger" if use_oracle else "transform")
    if use_oracle:
        order = TermOrder.complete(ring, [[ring.name(v) for v in support]])
        ini = initial_ideal(ideal, LinearForm(support), order, budgets)
    elif c is not None and case is TransferCase.TRINOMIAL:
        ini = ini_trinomial(ideal, a, b, c)
    else:
        ini = ini_binomial(ideal, a, b)

    base = minimal_primes(ideal)
    after = minimal_primes(ini)
    name = ring.name

    if case is TransferCase.LEAF_PAIR_CONVERSE:
        after_set = set(after)
        for p in base:
            report.checked_primes += 1
            extra = b if a in p else a
            q = p.union([extra])
            if q not in after_set:
                report.violations.append(
                    f"{p.format(ring)} gives {q.format(ring)}, not minimal over ini(I, f)"
                )
    else:
        for q in after:
            report.checked_primes += 1
            if not any(_explains(case, q, p, a, b, c) for p in base):
                report.violations.append(
                    f"{q.format(ring)} is not of the form (P, {name(a)})"
                    + (f" or (P, {name(b)})" if case is not TransferCase.LEAF else "")
                )

    if report.violations:
        logger.warning("%s transfer failed on %d primes", case.value, len(report.violations))
    else:
        logger.debug("%s transfer holds on %d primes", case.value, report.checked_primes)
    return report


def _explains(
    case: TransferCase, q: MonomialPrime, p: MonomialPrime, a: int, b: int, c: int | None
) -> bool:
    with_a = p.union([a]) == q
    with_b = p.union([b]) == q
    if case is TransferCase.LEAF:
        return with_a
    if case is TransferCase.LEAF_PAIR:
        return with_a or with_b
    return (c in p and with_a) or (c not in p and with_b)
