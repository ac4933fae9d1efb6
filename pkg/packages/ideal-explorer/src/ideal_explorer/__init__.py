"""
IdealExplorer - graph families, initially regular sequences and the check suite.

This package builds on MonomialIdealCore: it generates edge ideals of cycles,
paths and unicyclic graphs, evaluates their closed depth formulas, constructs
and verifies initially regular sequences, and runs the seeded verification
suite behind the `monoideal` command.
"""

__version__ = "0.1.0"

from .families import GraphKind, build_graph_ideal, formula_depth
from .sequences import (
    Engine,
    SequencePlan,
    VerificationTrace,
    cycle_sequence,
    iterated_initial_ideals,
    unicyclic_sequence,
    verify_initially_regular,
)
from .checks import CheckResult, CheckSuite, run_suite

__all__ = [
    "GraphKind",
    "build_graph_ideal",
    "formula_depth",
    "Engine",
    "SequencePlan",
    "VerificationTrace",
    "cycle_sequence",
    "iterated_initial_ideals",
    "unicyclic_sequence",
    "verify_initially_regular",
    "CheckResult",
    "CheckSuite",
    "run_suite",
]
