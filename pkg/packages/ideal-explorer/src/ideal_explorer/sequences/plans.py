"""
Sequence plans: linear forms plus the lex order they are run under.

A plan stores the order chains its construction requires (for example
x1 > x5 > x2) and a lex order completing them. Plans are exchanged as JSON:

    {"forms": [["x1", "x5", "x2"], ...],
     "constraints": [["x1", "x5", "x2"], ...],
     "provenance": "cycle C_5",
     "order": ["x1", "x5", "x2", "x4", "x3"]}

`order` is optional on input; without it the chains are completed with the
default strategy.
"""

from __future__ import annotations

import json
import logging
from dataclasses import dataclass, replace
from pathlib import Path
from typing import Any, Iterator, Sequence

from monomial_ideal_core.errors import InputError, ParseError
from monomial_ideal_core.models import CompletionStrategy, LinearForm, RingSpec, TermOrder

from ..families import build_graph_ideal

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SequencePlan:
    """
    Ordered linear forms f_1, ..., f_q and a lex order satisfying their chains.

    Attributes:
        ring: Ring the forms live in
        forms: The linear forms, in the order they are applied
        constraints: Disjoint chains of variable indices, each highest first
        order: Lex order respecting every chain
        provenance: Which construction produced the plan
    """

    ring: RingSpec
    forms: tuple[LinearForm, ...]
    constraints: tuple[tuple[int, ...], ...]
    order: TermOrder
    provenance: str = ""

    def __post_init__(self) -> None:
        if len(self.order.precedence) != self.ring.n:
            raise InputError("plan order does not cover the ring")
        for form in self.forms:
            form.check_ring(self.ring)
        for chain in self.constraints:
            ranks = [self.order.rank(v) for v in chain]
            if ranks != sorted(ranks):
                names = " > ".join(self.ring.name(v) for v in chain)
                raise InputError(f"plan order violates the constraint {names}")

    @classmethod
    def build(
        cls,
        ring: RingSpec,
        forms: Sequence[Sequence[str]],
        constraints: Sequence[Sequence[str]],
        provenance: str = "",
        strategy: CompletionStrategy = CompletionStrategy.CHAINS_THEN_DESCENDING,
    ) -> SequencePlan:
        """Plan from variable names, completing the chains with `strategy`."""
        order = TermOrder.complete(ring, constraints, strategy)
        return cls(
            ring,
            tuple(LinearForm.of(ring, names) for names in forms),
            tuple(tuple(ring.index(name) for name in chain) for chain in constraints),
            order,
            provenance,
        )

    def __len__(self) -> int:
        return len(self.forms)

    def constraint_names(self) -> list[list[str]]:
        return [[self.ring.name(v) for v in chain] for chain in self.constraints]

    def with_strategy(self, strategy: CompletionStrategy) -> SequencePlan:
        order = TermOrder.complete(self.ring, self.constraint_names(), strategy)
        return replace(self, order=order)

    def to_json(self) -> dict[str, Any]:
        return {
            "forms": [form.names(self.ring) for form in self.forms],
            "constraints": self.constraint_names(),
            "provenance": self.provenance,
            "order": self.order.names(self.ring),
        }

    def format(self) -> str:
        lines = [f"# {self.provenance}"] if self.provenance else []
        for i, form in enumerate(self.forms, start=1):
            lines.append(f"f_{i} = {' + '.join(form.names(self.ring))}")
        lines.append("order: " + " > ".join(self.order.names(self.ring)))
        return "\n".join(lines)


def _chain(*indices: int, prefix: str = "x") -> list[str]:
    return [f"{prefix}{i}" for i in indices]


def _cycle_forms(n_vertices: int) -> tuple[list[list[str]], list[list[str]], str]:
    if n_vertices < 3:
        raise InputError(f"a cycle needs at least 3 vertices, got {n_vertices}")
    n, residue = divmod(n_vertices, 3)
    last = n_vertices
    # h_1, g_1 and f_1 all start with x1 > x_last > x2
    chains = [_chain(1, last, 2)]
    chains += [_chain(3 * i - 2, 3 * i - 3, 3 * i - 1) for i in range(2, n + 1)]
    forms = [list(chain) for chain in chains]
    if residue == 2:
        tail = _chain(3 * n, 3 * n + 1) + _chain(*(3 * i - 1 for i in range(1, n + 1)))
        forms.append(tail)
    return forms, chains, f"cycle C_{n_vertices}"


def cycle_sequence(n_vertices: int) -> SequencePlan:
    """Initially regular sequence on I(C_m) of length ceil((m - 1) / 3).

    For m = 3n and m = 3n + 1 the forms are x1 + x_m + x2 followed by
    x_{3i-2} + x_{3i-3} + x_{3i-1} for 2 <= i <= n. For m = 3n + 2 these
    are followed by x_{3n} + x_{3n+1} + x2 + x5 + ... + x_{3n-1}.

    Raises:
        InputError: for fewer than 3 vertices
    """
    forms, chains, provenance = _cycle_forms(n_vertices)
    ring = build_graph_ideal("cycle", n_vertices).ring
    return SequencePlan.build(ring, forms, chains, provenance)


def unicyclic_sequence(t: int, cycle_residue: int = 2) -> SequencePlan:
    """Sequence on I(G_{3t+2,2}) (or I(G_{3t,2}) with cycle_residue=0).

    The cycle part is cycle_sequence(3t + residue); it is followed by y2 + y1
    with y2 > y1.

    Raises:
        InputError: for t < 1 or a residue other than 0 and 2
    """
    if t < 1:
        raise InputError(f"t must be >= 1, got {t}")
    if cycle_residue not in (0, 2):
        raise InputError(f"cycle_residue must be 0 or 2, got {cycle_residue}")
    n_vertices = 3 * t + cycle_residue
    forms, chains, _ = _cycle_forms(n_vertices)
    forms.append(["y2", "y1"])
    chains.append(["y2", "y1"])
    ring = build_graph_ideal("gnm", n_vertices, 2).ring
    return SequencePlan.build(ring, forms, chains, f"unicyclic G_{n_vertices},2")


def _linear_extensions(chains: list[tuple[int, ...]]) -> Iterator[tuple[int, ...]]:
    """Every total order keeping each chain in place, by repeatedly taking a chain head."""
    if not any(chains):
        yield ()
        return
    for i, chain in enumerate(chains):
        if not chain:
            continue
        rest = chains[:i] + [chain[1:]] + chains[i + 1:]
        for tail in _linear_extensions(rest):
            yield (chain[0],) + tail


def alternative_completions(plan: SequencePlan, k: int = 3) -> list[SequencePlan]:
    """Up to k plans with distinct lex completions of the plan's chains, the plan's own first.

    The completion strategies are tried first; when they give fewer than k
    orders, further linear extensions of the chains are enumerated. Fewer than
    k plans come back only when the chains admit fewer orders.
    """
    plans = [plan]
    seen = {plan.order}
    for strategy in CompletionStrategy:
        if len(plans) >= k:
            return plans
        other = plan.with_strategy(strategy)
        if other.order not in seen:
            seen.add(other.order)
            plans.append(other)

    constrained = {v for chain in plan.constraints for v in chain}
    singles = [(v,) for v in reversed(range(plan.ring.n)) if v not in constrained]
    for precedence in _linear_extensions(list(plan.constraints) + singles):
        if len(plans) >= k:
            break
        order = TermOrder(precedence)
        if order not in seen:
            seen.add(order)
            plans.append(replace(plan, order=order))
    return plans


def plan_from_json(ring: RingSpec, data: Any) -> SequencePlan:
    """Build a plan over `ring` from its JSON document form."""
    if not isinstance(data, dict) or "forms" not in data:
        raise ParseError("plan must be an object with 'forms'")
    try:
        forms = [[str(name) for name in form] for form in data["forms"]]
        constraints = [[str(name) for name in chain] for chain in data.get("constraints", [])]
        provenance = str(data.get("provenance", ""))
        if "order" in data:
            order = TermOrder.lex(ring, [str(name) for name in data["order"]])
            return SequencePlan(
                ring,
                tuple(LinearForm.of(ring, names) for names in forms),
                tuple(tuple(ring.index(name) for name in chain) for chain in constraints),
                order,
                provenance,
            )
    except TypeError as e:
        raise ParseError(f"malformed plan: {e}") from e
    return SequencePlan.build(ring, forms, constraints, provenance)


def load_plan(path: str | Path, ring: RingSpec) -> SequencePlan:
    path = Path(path)
    try:
        data = json.loads(path.read_text())
    except OSError as e:
        raise InputError(f"cannot read plan file {path}: {e}") from e
    except json.JSONDecodeError as e:
        raise ParseError(f"invalid plan JSON in {path}: {e}") from e
    plan = plan_from_json(ring, data)
    logger.info("Loaded plan with %d forms from %s", len(plan), path)
    return plan


def dump_plan(plan: SequencePlan, path: str | Path) -> None:
    Path(path).write_text(json.dumps(plan.to_json(), indent=2, sort_keys=True) + "\n")
