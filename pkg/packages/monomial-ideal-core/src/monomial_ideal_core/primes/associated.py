"""
Associated primes of monomial ideals.

Two independent routes:

- associated_primes: polarize, take the minimal primes of the squarefree
  polarization and depolarize them.
- associated_primes_bruteforce: scan monomials c with d_x(c) <= d_x(I) and keep
  every colon ideal (I : c) generated by variables.

The second one exists to check the first.
"""

from __future__ import annotations

import itertools
import logging
from math import prod

from ..errors import BudgetExceeded
from ..models import (
    LinearForm,
    Monomial,
    MonomialIdeal,
    MonomialPrime,
    colon,
    sorted_primes,
    var_degrees,
)
from ..settings import Budgets, load_budgets
from .covers import minimal_primes
from .polarization import polarize

logger = logging.getLogger(__name__)


def associated_primes(ideal: MonomialIdeal) -> list[MonomialPrime]:
    """Ass(R/I) through the polarization.

    Args:
        ideal: Nonzero proper monomial ideal

    Returns:
        Associated primes in canonical order

    Raises:
        ZeroIdeal: for I = 0
    """
    ideal.require_nonzero("associated_primes")
    if ideal.is_squarefree:
        return minimal_primes(ideal)
    polarized, pmap = polarize(ideal)
    primes = sorted_primes(pmap.depolarize(p) for p in minimal_primes(polarized))
    logger.debug(
        "Found %d associated primes via %d polarized variables", len(primes), pmap.target.n
    )
    return primes


def _prime_of_colon(ideal: MonomialIdeal, c: Monomial) -> MonomialPrime | None:
    quotient = colon(ideal, c)
    if all(g.degree == 1 for g in quotient.gens):
        return MonomialPrime.of(g.support()[0] for g in quotient.gens)
    return None


def associated_primes_bruteforce(
    ideal: MonomialIdeal, budgets: Budgets | None = None
) -> list[MonomialPrime]:
    """Ass(R/I) by scanning candidate witnesses c with (I : c) prime.

    Args:
        ideal: Nonzero proper monomial ideal
        budgets: Oracle budgets; `witness_candidates` caps the scan

    Returns:
        Associated primes in canonical order

    Raises:
        ZeroIdeal: for I = 0
        BudgetExceeded: when prod(d_x(I) + 1) exceeds the witness budget
    """
    ideal.require_nonzero("associated_primes_bruteforce")
    budgets = budgets or load_budgets()
    degrees = var_degrees(ideal)
    candidates = prod(d + 1 for d in degrees)
    if candidates > budgets.witness_candidates:
        raise BudgetExceeded("witness_candidates", budgets.witness_candidates, candidates)

    found: set[MonomialPrime] = set()
    for exps in itertools.product(*(range(d + 1) for d in degrees)):
        c = Monomial(exps)
        if ideal.contains(c):
            continue
        prime = _prime_of_colon(ideal, c)
        if prime is not None:
            found.add(prime)
    logger.debug("Scanned %d witness candidates, %d primes", candidates, len(found))
    return sorted_primes(found)


def embedded_primes(ideal: MonomialIdeal) -> list[MonomialPrime]:
    """Associated primes that are not minimal."""
    minimal = set(minimal_primes(ideal))
    return [p for p in associated_primes(ideal) if p not in minimal]


def is_regular_linear_form(ideal: MonomialIdeal, form: LinearForm) -> bool:
    """A linear form is regular on R/I iff no associated prime contains all its variables."""
    form.check_ring(ideal.ring)
    support = frozenset(form.support)
    return not any(support <= p.vars for p in associated_primes(ideal))
