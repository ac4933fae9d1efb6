"""
Iterated initial ideals and initial regularity of sequence plans.

Given I_1 = I and a plan f_1, ..., f_q, the chain I_{k+1} = ini(I_k, f_k) is
computed one step at a time. f_k is regular on R/I_k exactly when no
associated prime of I_k contains every variable of f_k, so the plan is
initially regular up to the first step where that fails.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from enum import Enum
from typing import Any

from monomial_ideal_core.errors import InputError, OracleMismatch
from monomial_ideal_core.groebner import initial_ideal
from monomial_ideal_core.models import LinearForm, MonomialIdeal, TermOrder
from monomial_ideal_core.primes import associated_primes
from monomial_ideal_core.settings import Budgets
from monomial_ideal_core.transforms import ini_transform

from .plans import SequencePlan

logger = logging.getLogger(__name__)


class Engine(str, Enum):
    """How each ini(I_k, f_k) is computed."""
    TRANSFORM = "transform"
    BUCHBERGER = "buchberger"
    BOTH = "both"


def next_initial_ideal(
    ideal: MonomialIdeal,
    form: LinearForm,
    order: TermOrder,
    engine: Engine = Engine.TRANSFORM,
    budgets: Budgets | None = None,
) -> tuple[MonomialIdeal, str]:
    """ini(I, f) and the name of the engine that produced it.

    TRANSFORM tries the closed forms and falls back to Buchberger when no
    closed form applies. BOTH runs the two and compares them.

    Raises:
        OracleMismatch: BOTH found a closed form that disagrees with Buchberger
    """
    engine = Engine(engine)
    if engine is Engine.BUCHBERGER:
        return initial_ideal(ideal, form, order, budgets), Engine.BUCHBERGER.value

    closed = ini_transform(ideal, form, order)
    if closed is None:
        if engine is Engine.TRANSFORM:
            logger.info(
                "No closed form for %s on %s; falling back to Buchberger",
                form.format(ideal.ring),
                ideal,
            )
        return initial_ideal(ideal, form, order, budgets), Engine.BUCHBERGER.value
    if engine is Engine.BOTH:
        oracle = initial_ideal(ideal, form, order, budgets)
        if oracle != closed:
            raise OracleMismatch(
                f"ini({ideal}, {form.format(ideal.ring)}): closed form {closed}, "
                f"Buchberger {oracle}"
            )
        return closed, Engine.BOTH.value
    return closed, Engine.TRANSFORM.value


@dataclass(frozen=True)
class StepRecord:
    """
    One step of an iterated initial ideal computation.

    Attributes:
        index: k, starting at 1
        ideal: I_k, the ideal the form is applied to
        form: f_k
        regular: Whether f_k is regular on R/I_k
        ass_count: Number of associated primes of I_k
        engine: Engine that produced I_{k+1}
    """

    index: int
    ideal: MonomialIdeal
    form: LinearForm
    regular: bool
    ass_count: int
    engine: str

    def to_json(self) -> dict[str, Any]:
        ring = self.ideal.ring
        return {
            "index": self.index,
            "ideal": self.ideal.format_gens(),
            "form": self.form.names(ring),
            "regular": self.regular,
            "ass_count": self.ass_count,
            "engine": self.engine,
        }


@dataclass(frozen=True)
class VerificationTrace:
    """
    Result of checking a plan for initial regularity.

    Attributes:
        steps: Records of the steps that were run
        verified_length: Number of leading forms proved regular
        final_ideal: The ideal after the last regular step
    """

    steps: tuple[StepRecord, ...]
    verified_length: int
    final_ideal: MonomialIdeal

    @property
    def complete(self) -> bool:
        return self.verified_length == len(self.steps) and all(s.regular for s in self.steps)

    def to_json(self) -> dict[str, Any]:
        return {
            "verified_length": self.verified_length,
            "steps": [step.to_json() for step in self.steps],
            "final_ideal": self.final_ideal.format_gens(),
        }

    def format(self) -> str:
        lines = []
        for step in self.steps:
            ring = step.ideal.ring
            mark = "regular" if step.regular else "NOT regular"
            lines.append(
                f"I_{step.index} = {step.ideal}\n"
                f"  f_{step.index} = {step.form.format(ring)}: {mark} "
                f"({step.ass_count} associated primes, {step.engine})"
            )
        lines.append(f"verified length: {self.verified_length}")
        return "\n".join(lines)


def _check_ring(ideal: MonomialIdeal, plan: SequencePlan) -> None:
    if ideal.ring != plan.ring:
        raise InputError(
            f"plan ring ({' '.join(plan.ring.variables)}) differs from the ideal ring "
            f"({' '.join(ideal.ring.variables)})"
        )


def iterated_initial_ideals(
    ideal: MonomialIdeal,
    plan: SequencePlan,
    engine: Engine = Engine.TRANSFORM,
    budgets: Budgets | None = None,
) -> list[MonomialIdeal]:
    """[I_1, ..., I_{q+1}] with I_1 = I and I_{k+1} = ini(I_k, f_k)."""
    _check_ring(ideal, plan)
    chain = [ideal]
    for form in plan.forms:
        current, _ = next_initial_ideal(chain[-1], form, plan.order, engine, budgets)
        chain.append(current)
    return chain


def verify_initially_regular(
    ideal: MonomialIdeal,
    plan: SequencePlan,
    engine: Engine = Engine.TRANSFORM,
    budgets: Budgets | None = None,
) -> VerificationTrace:
    """Check f_k regular on R/I_k for k = 1, 2, ... and stop at the first failure.

    Args:
        ideal: I_1
        plan: Forms and lex order
        engine: How to compute each ini(I_k, f_k)
        budgets: Oracle budgets

    Returns:
        Trace whose verified_length counts the leading regular forms
    """
    _check_ring(ideal, plan)
    ideal.require_nonzero("verify_initially_regular")
    steps: list[StepRecord] = []
    current = ideal
    verified = 0
    for k, form in enumerate(plan.forms, start=1):
        ass = associated_primes(current)
        support = frozenset(form.support)
        regular = not any(support <= p.vars for p in ass)
        if not regular:
            logger.info("f_%d = %s is not regular on R/I_%d", k, form.format(ideal.ring), k)
            steps.append(StepRecord(k, current, form, False, len(ass), "-"))
            break
        following, used = next_initial_ideal(current, form, plan.order, engine, budgets)
        steps.append(StepRecord(k, current, form, True, len(ass), used))
        verified = k
        current = following
    logger.debug("Verified %d of %d forms (%s)", verified, len(plan), plan.provenance)
    return VerificationTrace(tuple(steps), verified, current)
