"""
Closed-form initial ideals for binomial and trinomial linear forms, leaf
detection and minimal-prime transfer checks.
"""

from .leaves import LeafPair, find_leaf_pairs, find_leaves, is_leaf_pair, leaf_generators
from .initial_forms import (
    binomial_context,
    check_trinomial_conditions,
    ini_binomial,
    ini_transform,
    ini_trinomial,
)
from .transfer import TransferCase, TransferReport, check_min_prime_transfer

__all__ = [
    "LeafPair",
    "find_leaf_pairs",
    "find_leaves",
    "is_leaf_pair",
    "leaf_generators",
    "binomial_context",
    "check_trinomial_conditions",
    "ini_binomial",
    "ini_transform",
    "ini_trinomial",
    "TransferCase",
    "TransferReport",
    "check_min_prime_transfer",
]
