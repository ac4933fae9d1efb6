"""
Data models for rings, monomials, ideals, linear forms and primes.
"""

from .ring import CompletionStrategy, Monomial, RingSpec, TermOrder
from .ideal import (
    LinearForm,
    MonomialIdeal,
    bracket_power,
    colon,
    extend_ring,
    ideal_sum_with_variables,
    minimal_generators,
    squarefree_part,
    var_degree,
    var_degrees,
)
from .prime import MonomialPrime, sorted_primes

__all__ = [
    "CompletionStrategy",
    "Monomial",
    "RingSpec",
    "TermOrder",
    "LinearForm",
    "MonomialIdeal",
    "bracket_power",
    "colon",
    "extend_ring",
    "ideal_sum_with_variables",
    "minimal_generators",
    "squarefree_part",
    "var_degree",
    "var_degrees",
    "MonomialPrime",
    "sorted_primes",
]
