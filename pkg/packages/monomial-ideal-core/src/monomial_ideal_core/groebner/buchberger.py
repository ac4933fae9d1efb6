"""
Buchberger's algorithm over the rationals.

Used as ground truth for ini(I, f) with I monomial and f one linear form.
Pairs are selected by the normal strategy (smallest lcm of leading
monomials, ties by index pair) and pairs with coprime leading monomials are
skipped. The result is minimalized and interreduced to the reduced basis.
"""

from __future__ import annotations

import heapq
import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from ..errors import BudgetExceeded, InputError
from ..models import LinearForm, Monomial, MonomialIdeal, RingSpec, TermOrder, minimal_generators
from ..settings import Budgets, load_budgets
from .polynomial import Polynomial

logger = logging.getLogger(__name__)


def s_polynomial(f: Polynomial, g: Polynomial, order: TermOrder) -> Polynomial:
    """S(f, g) = (L / lt(f)) f - (L / lt(g)) g with L the lcm of leading monomials."""
    lmf, lmg = f.leading_monomial(order), g.leading_monomial(order)
    lcm = lmf.lcm(lmg)
    left = f.mul_term(lcm.quotient(lmf), 1 / f.terms[lmf])
    right = g.mul_term(lcm.quotient(lmg), 1 / g.terms[lmg])
    return left - right


def reduce(p: Polynomial, basis: Sequence[Polynomial], order: TermOrder) -> Polynomial:
    """Normal form of p: no remaining term is divisible by a leading monomial of `basis`.

    Args:
        p: Polynomial to reduce
        basis: Nonzero divisors
        order: Term order for leading terms

    Returns:
        The fully reduced remainder
    """
    leads = [(g.leading_monomial(order), g) for g in basis]
    remainder: list[tuple[Monomial, Fraction]] = []
    while not p.is_zero:
        m = p.leading_monomial(order)
        c = p.terms[m]
        for lm, g in leads:
            if lm.divides(m):
                p = p - g.mul_term(m.quotient(lm), c / g.terms[lm])
                break
        else:
            remainder.append((m, c))
            p = Polynomial(p.n, {t: v for t, v in p.terms.items() if t != m})
    return Polynomial.from_terms(p.n, remainder)


@dataclass
class GroebnerBasis:
    """
    Reduced Gröbner basis.

    Attributes:
        order: Term order the basis is reduced for
        polys: Monic basis elements, highest leading monomial first
    """

    order: TermOrder
    polys: list[Polynomial]

    def leading_monomials(self) -> list[Monomial]:
        return [p.leading_monomial(self.order) for p in self.polys]

    def leading_ideal(self, ring: RingSpec) -> MonomialIdeal:
        return minimal_generators(ring, self.leading_monomials())

    def verify(self) -> bool:
        """Re-check that every S-polynomial of the basis reduces to zero."""
        for i in range(len(self.polys)):
            for j in range(i + 1, len(self.polys)):
                s = s_polynomial(self.polys[i], self.polys[j], self.order)
                if not reduce(s, self.polys, self.order).is_zero:
                    logger.warning("S-pair (%d, %d) does not reduce to zero", i, j)
                    return False
        return True

    def format(self, ring: RingSpec) -> list[str]:
        return [p.format(ring, self.order) for p in self.polys]


class BuchbergerEngine:
    """
    Buchberger runs bounded by the `buchberger_pairs` budget.
    """

    def __init__(self, order: TermOrder, budgets: Budgets | None = None) -> None:
        """
        Args:
            order: Term order used for every leading term
            budgets: Oracle budgets (defaults from load_budgets())
        """
        self.order = order
        self.budgets = budgets or load_budgets()
        self.pairs_processed = 0

    def run(self, gens: Sequence[Polynomial]) -> GroebnerBasis:
        """Reduced Gröbner basis of the ideal generated by `gens`.

        Raises:
            BudgetExceeded: when more S-pairs are needed than the budget allows
        """
        order = self.order
        basis: list[Polynomial] = []
        leads: list[Monomial] = []
        queue: list[tuple[tuple[int, ...], int, int]] = []

        def add(poly: Polynomial) -> None:
            poly = poly.monic(order)
            lm = poly.leading_monomial(order)
            k = len(basis)
            for i, other in enumerate(leads):
                if lm.is_coprime(other):
                    continue
                heapq.heappush(queue, (order.key(lm.lcm(other)), i, k))
            basis.append(poly)
            leads.append(lm)

        for g in gens:
            if not g.is_zero:
                add(g)

        self.pairs_processed = 0
        limit = self.budgets.buchberger_pairs
        while queue:
            _, i, j = heapq.heappop(queue)
            if basis[i].is_monomial and basis[j].is_monomial:
                continue
            self.pairs_processed += 1
            if self.pairs_processed > limit:
                raise BudgetExceeded("buchberger_pairs", limit, self.pairs_processed)
            r = reduce(s_polynomial(basis[i], basis[j], order), basis, order)
            if not r.is_zero:
                add(r)

        reduced = self._interreduce(self._minimalize(basis))
        logger.debug(
            "Buchberger finished: %d pairs, %d basis elements", self.pairs_processed, len(reduced)
        )
        return GroebnerBasis(order, reduced)

    def _minimalize(self, basis: list[Polynomial]) -> list[Polynomial]:
        kept: list[Polynomial] = []
        for f in sorted(basis, key=lambda h: self.order.key(h.leading_monomial(self.order))):
            lm = f.leading_monomial(self.order)
            if not any(g.leading_monomial(self.order).divides(lm) for g in kept):
                kept.append(f)
        return kept

    def _interreduce(self, basis: list[Polynomial]) -> list[Polynomial]:
        reduced = []
        for i, f in enumerate(basis):
            r = reduce(f, basis[:i] + basis[i + 1:], self.order)
            reduced.append(r.monic(self.order))
        reduced.sort(key=lambda h: self.order.key(h.leading_monomial(self.order)), reverse=True)
        return reduced


def buchberger(
    gens: Sequence[Polynomial], order: TermOrder, budgets: Budgets | None = None
) -> GroebnerBasis:
    return BuchbergerEngine(order, budgets).run(gens)


def initial_ideal(
    ideal: MonomialIdeal,
    form: LinearForm | None,
    order: TermOrder,
    budgets: Budgets | None = None,
) -> MonomialIdeal:
    """ini(I, f): leading monomials of the reduced basis of (G(I), f).

    Args:
        ideal: Nonzero monomial ideal
        form: Linear form to add; None returns I itself
        order: Lex order on ideal.ring
        budgets: Oracle budgets

    Returns:
        Minimally generated initial ideal in ideal.ring
    """
    ideal.require_nonzero("initial_ideal")
    if form is None:
        return ideal
    ring = ideal.ring
    if len(order.precedence) != ring.n:
        raise InputError(f"term order has {len(order.precedence)} variables, ring has {ring.n}")
    gens = [Polynomial.from_monomial(m) for m in ideal.gens]
    gens.append(Polynomial.from_linear_form(ring, form))
    basis = buchberger(gens, order, budgets)
    return basis.leading_ideal(ring)
