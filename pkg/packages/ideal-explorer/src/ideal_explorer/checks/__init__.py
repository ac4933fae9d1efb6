"""
Seeded verification suite and its random instance generators.
"""

from .generators import (
    TransformInstance,
    binomial_instance,
    leaf_pair_instance,
    random_ideal,
    regular_family,
    top_degree_ideal,
    trinomial_instance,
)
from .suite import CheckResult, CheckSuite, LedgerEntry, run_suite

__all__ = [
    "TransformInstance",
    "binomial_instance",
    "leaf_pair_instance",
    "random_ideal",
    "regular_family",
    "top_degree_ideal",
    "trinomial_instance",
    "CheckResult",
    "CheckSuite",
    "LedgerEntry",
    "run_suite",
]
