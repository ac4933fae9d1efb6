"""
Sequence plans for cycles and unicyclic graphs, and their verification.
"""

from .plans import (
    SequencePlan,
    alternative_completions,
    cycle_sequence,
    dump_plan,
    load_plan,
    plan_from_json,
    unicyclic_sequence,
)
from .verification import (
    Engine,
    StepRecord,
    VerificationTrace,
    iterated_initial_ideals,
    next_initial_ideal,
    verify_initially_regular,
)

__all__ = [
    "SequencePlan",
    "alternative_completions",
    "cycle_sequence",
    "dump_plan",
    "load_plan",
    "plan_from_json",
    "unicyclic_sequence",
    "Engine",
    "StepRecord",
    "VerificationTrace",
    "iterated_initial_ideals",
    "next_initial_ideal",
    "verify_initially_regular",
]
