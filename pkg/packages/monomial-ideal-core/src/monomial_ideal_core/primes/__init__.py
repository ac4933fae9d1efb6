"""
Minimal and associated primes, polarization and embedded-prime structure.
"""

from .covers import CoverEnumerator, minimal_edges, minimal_primes
from .polarization import PolarizationMap, depolarize, polarize
from .associated import (
    associated_primes,
    associated_primes_bruteforce,
    embedded_primes,
    is_regular_linear_form,
)
from .embedded import (
    EmbeddedDecomposition,
    all_decompositions,
    embedded_decomposition,
    has_no_embedded_hypothesis,
    regular_form_family_condition,
    star_neighbor_table,
    star_neighbors,
)

__all__ = [
    "CoverEnumerator",
    "minimal_edges",
    "minimal_primes",
    "PolarizationMap",
    "depolarize",
    "polarize",
    "associated_primes",
    "associated_primes_bruteforce",
    "embedded_primes",
    "is_regular_linear_form",
    "EmbeddedDecomposition",
    "all_decompositions",
    "embedded_decomposition",
    "has_no_embedded_hypothesis",
    "regular_form_family_condition",
    "star_neighbor_table",
    "star_neighbors",
]
