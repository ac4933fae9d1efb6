"""
Sparse polynomials with exact rational coefficients.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable

from ..models import LinearForm, Monomial, RingSpec, TermOrder


@dataclass(frozen=True)
class Polynomial:
    """
    Polynomial as a map from Monomial to a nonzero Fraction.

    Instances are treated as immutable; arithmetic returns new objects and
    never stores zero coefficients.

    Attributes:
        n: Number of ring variables
        terms: Nonzero coefficients keyed by monomial
    """

    n: int
    terms: dict[Monomial, Fraction] = field(default_factory=dict)

    @classmethod
    def zero(cls, n: int) -> Polynomial:
        return cls(n, {})

    @classmethod
    def from_terms(cls, n: int, terms: Iterable[tuple[Monomial, Fraction | int]]) -> Polynomial:
        acc: dict[Monomial, Fraction] = {}
        for m, c in terms:
            acc[m] = acc.get(m, Fraction(0)) + Fraction(c)
        return cls(n, {m: c for m, c in acc.items() if c != 0})

    @classmethod
    def from_monomial(cls, m: Monomial, coefficient: Fraction | int = 1) -> Polynomial:
        return cls.from_terms(len(m), [(m, coefficient)])

    @classmethod
    def from_linear_form(cls, ring: RingSpec, form: LinearForm) -> Polynomial:
        form.check_ring(ring)
        return cls.from_terms(ring.n, [(Monomial.variable(ring.n, i), 1) for i in form.support])

    def __hash__(self) -> int:
        return hash((self.n, frozenset(self.terms.items())))

    @property
    def is_zero(self) -> bool:
        return not self.terms

    @property
    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def monomials(self) -> list[Monomial]:
        return list(self.terms)

    def leading_monomial(self, order: TermOrder) -> Monomial:
        if not self.terms:
            raise ValueError("the zero polynomial has no leading monomial")
        return max(self.terms, key=order.key)

    def leading_coefficient(self, order: TermOrder) -> Fraction:
        return self.terms[self.leading_monomial(order)]

    def __add__(self, other: Polynomial) -> Polynomial:
        return Polynomial.from_terms(self.n, list(self.terms.items()) + list(other.terms.items()))

    def __neg__(self) -> Polynomial:
        return Polynomial(self.n, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other: Polynomial) -> Polynomial:
        return self + (-other)

    def mul_term(self, m: Monomial, coefficient: Fraction | int = 1) -> Polynomial:
        c = Fraction(coefficient)
        if c == 0:
            return Polynomial.zero(self.n)
        return Polynomial(self.n, {t * m: v * c for t, v in self.terms.items()})

    def monic(self, order: TermOrder) -> Polynomial:
        lc = self.leading_coefficient(order)
        return Polynomial(self.n, {m: c / lc for m, c in self.terms.items()})

    def format(self, ring: RingSpec, order: TermOrder | None = None) -> str:
        """Render terms highest first, e.g. `x1 + x2` or `-x2^2`."""
        if not self.terms:
            return "0"
        order = order or TermOrder.default(ring)
        parts = []
        for m in sorted(self.terms, key=order.key, reverse=True):
            c = self.terms[m]
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            body = m.format(ring)
            if m.is_one:
                text = str(mag)
            elif mag == 1:
                text = body
            else:
                text = f"{mag}*{body}"
            parts.append((sign, text))
        first_sign, first = parts[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, text in parts[1:]:
            out += f" {sign} {text}"
        return out
