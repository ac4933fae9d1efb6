"""
Reproducible verification suite behind `monoideal check`.

Each named check compares a closed formula or fast algorithm with an
independent oracle over a fixed range or a seeded batch of random instances,
and reports a CheckResult. Every sequence verification run by the suite is
recorded in a ledger; the lower-bound check then confirms that no verified
length exceeds the depth computed by the homological oracle.
"""

from __future__ import annotations

import logging
import random
import time
from dataclasses import dataclass, field
from typing import Any, Callable, Iterable

from monomial_ideal_core.errors import BudgetExceeded, InputError, MonomialIdealError
from monomial_ideal_core.groebner import initial_ideal
from monomial_ideal_core.homology import depth_oracle
from monomial_ideal_core.models import (
    MonomialIdeal,
    MonomialPrime,
    bracket_power,
    squarefree_part,
)
from monomial_ideal_core.primes import (
    all_decompositions,
    associated_primes,
    associated_primes_bruteforce,
    embedded_decomposition,
    embedded_primes,
    is_regular_linear_form,
    minimal_primes,
)
from monomial_ideal_core.serialization import parse_ideal_text
from monomial_ideal_core.settings import Budgets, load_budgets
from monomial_ideal_core.transforms import TransferCase, check_min_prime_transfer, ini_transform

from ..families import build_graph_ideal, depth_cycle_formula, depth_unicyclic_formula
from ..sequences import (
    Engine,
    alternative_completions,
    cycle_sequence,
    unicyclic_sequence,
    verify_initially_regular,
)
from .generators import (
    binomial_instance,
    leaf_pair_instance,
    random_ideal,
    regular_family,
    top_degree_ideal,
    trinomial_instance,
)

logger = logging.getLogger(__name__)

ASSOCIATED_EXAMPLE = "vars a b c d e f g\ngens a^3*b*c a^2*d b^2*c c*e^2 d*e c^2*f e*g\n"

EXAMPLE_MINIMAL = ("ace", "cde", "cdg", "abef", "bdef")

# Embedded prime -> its known decompositions as (minimal prime, star-neighbor extras)
EXAMPLE_DECOMPOSITIONS: dict[str, tuple[tuple[str, str], ...]] = {
    "abce": (("ace", "b"),),
    "bcde": (("cde", "b"),),
    "abcde": (("ace", "bd"), ("cde", "ab")),
    "abdef": (("abef", "d"), ("bdef", "a")),
    "bcdeg": (("cde", "bg"), ("cdg", "be")),
    "bdefg": (("bdef", "g"),),
    "abcdeg": (("ace", "bdg"), ("cde", "abg"), ("cdg", "abe")),
    "abdefg": (("abef", "dg"), ("bdef", "ag")),
}


@dataclass(frozen=True)
class CheckResult:
    """
    Outcome of one named check.

    Attributes:
        name: Check name, as accepted by `--only`
        passed: True when no instance failed and the check finished in time
        instances: Number of instances compared
        failures: Description of every failing instance
        elapsed: Wall time in seconds (text output only)
    """

    name: str
    passed: bool
    instances: int
    failures: tuple[str, ...] = ()
    elapsed: float = 0.0

    def to_json(self) -> dict[str, Any]:
        return {
            "name": self.name,
            "passed": self.passed,
            "instances": self.instances,
            "failures": list(self.failures),
        }

    def format(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        line = f"{status} {self.name}: {self.instances} instances in {self.elapsed:.2f}s"
        return "\n".join([line] + [f"    {failure}" for failure in self.failures])


@dataclass(frozen=True)
class LedgerEntry:
    """A verified sequence: label, the ideal it was run on and its certified length."""

    label: str
    ideal: MonomialIdeal
    verified_length: int


@dataclass
class _CheckRun:
    """Mutable bookkeeping for one check while it runs."""

    name: str
    deadline: float | None
    instances: int = 0
    failures: list[str] = field(default_factory=list)
    timed_out: bool = False

    def expired(self) -> bool:
        if self.deadline is not None and time.monotonic() > self.deadline:
            self.timed_out = True
        return self.timed_out

    def expect(self, ok: bool, message: str) -> None:
        self.instances += 1
        if not ok:
            logger.warning("%s: %s", self.name, message)
            self.failures.append(message)


class CheckSuite:
    """
    The named checks, run in a fixed order from one seed.

    Each check draws its random instances from random.Random(f"{seed}:{name}"),
    so running a single check with `only` reproduces the same instances as a
    full run.
    """

    NAMES = (
        "cycle-depth",
        "cycle-sequences",
        "transform-oracle",
        "ass-example",
        "embedded-property",
        "corollaries",
        "unicyclic-depth",
        "lower-bound",
    )
    DEFAULT_COUNTS = {
        "transform-oracle": 500,
        "embedded-property": 300,
        "corollaries": 300,
    }
    QUICK_COUNTS = {
        "transform-oracle": 60,
        "embedded-property": 40,
        "corollaries": 40,
    }
    CYCLE_RANGE = range(3, 12)
    QUICK_CYCLE_RANGE = range(3, 9)
    UNICYCLIC_N = range(3, 9)
    UNICYCLIC_M = range(0, 6)
    QUICK_UNICYCLIC_N = range(3, 7)
    QUICK_UNICYCLIC_M = range(0, 4)

    def __init__(
        self,
        seed: int = 0,
        timeout: float | None = None,
        quick: bool = False,
        budgets: Budgets | None = None,
    ) -> None:
        """Configure a suite run.

        Args:
            seed: Seed for every random instance generator
            timeout: Per-check limit in seconds; a check that runs out fails
            quick: Use the smaller instance counts and ranges
            budgets: Oracle budgets
        """
        self.seed = seed
        self.timeout = timeout
        self.quick = quick
        self.budgets = budgets or load_budgets()
        self.ledger: list[LedgerEntry] = []
        self._depths: dict[MonomialIdeal, int] = {}
        self._checks: dict[str, Callable[[_CheckRun, random.Random], None]] = {
            "cycle-depth": self._check_cycle_depth,
            "cycle-sequences": self._check_cycle_sequences,
            "transform-oracle": self._check_transform_oracle,
            "ass-example": self._check_ass_example,
            "embedded-property": self._check_embedded_property,
            "corollaries": self._check_corollaries,
            "unicyclic-depth": self._check_unicyclic_depth,
            "lower-bound": self._check_lower_bound,
        }

    @property
    def names(self) -> list[str]:
        return list(self.NAMES)

    def count(self, name: str) -> int:
        return (self.QUICK_COUNTS if self.quick else self.DEFAULT_COUNTS)[name]

    def run(self, only: Iterable[str] | None = None) -> list[CheckResult]:
        """Run the selected checks (all by default) in suite order."""
        selected = list(only) if only else self.names
        unknown = [name for name in selected if name not in self._checks]
        if unknown:
            raise InputError(f"unknown checks: {', '.join(unknown)}")
        return [self.run_check(name) for name in self.names if name in selected]

    def run_check(self, name: str) -> CheckResult:
        started = time.monotonic()
        deadline = started + self.timeout if self.timeout is not None else None
        run = _CheckRun(name, deadline)
        rng = random.Random(f"{self.seed}:{name}")
        logger.info("Running check %s (seed %d)", name, self.seed)
        try:
            self._checks[name](run, rng)
        except MonomialIdealError as e:
            run.failures.append(f"aborted: {type(e).__name__}: {e}")
        if run.timed_out:
            run.failures.append(f"timed out after {self.timeout}s ({run.instances} instances)")
        elapsed = time.monotonic() - started
        result = CheckResult(name, not run.failures, run.instances, tuple(run.failures), elapsed)
        logger.info("%s: %s", name, "passed" if result.passed else "FAILED")
        return result

    def depth(self, ideal: MonomialIdeal) -> int:
        """depth(R/I) from the homological oracle, cached per ideal."""
        if ideal not in self._depths:
            self._depths[ideal] = depth_oracle(ideal, self.budgets).value
        return self._depths[ideal]

    def _record(self, label: str, ideal: MonomialIdeal, verified_length: int) -> None:
        self.ledger.append(LedgerEntry(label, ideal, verified_length))

    def _check_cycle_depth(self, run: _CheckRun, rng: random.Random) -> None:
        for n in self.QUICK_CYCLE_RANGE if self.quick else self.CYCLE_RANGE:
            if run.expired():
                return
            got = self.depth(build_graph_ideal("cycle", n))
            expected = depth_cycle_formula(n)
            run.expect(got == expected, f"C_{n}: oracle depth {got}, formula {expected}")

    def _check_cycle_sequences(self, run: _CheckRun, rng: random.Random) -> None:
        for m in self.QUICK_CYCLE_RANGE if self.quick else self.CYCLE_RANGE:
            ideal = build_graph_ideal("cycle", m)
            expected = depth_cycle_formula(m)
            for plan in alternative_completions(cycle_sequence(m), k=3):
                if run.expired():
                    return
                order = " > ".join(plan.order.names(plan.ring))
                trace = verify_initially_regular(ideal, plan, Engine.BUCHBERGER, self.budgets)
                self._record(f"C_{m} under {order}", ideal, trace.verified_length)
                run.expect(
                    trace.verified_length == expected,
                    f"C_{m} under {order}: "
                    f"verified {trace.verified_length}, expected {expected}",
                )

    def _check_transform_oracle(self, run: _CheckRun, rng: random.Random) -> None:
        for n in (1, 2, 3):
            if run.expired():
                return
            m = 3 * n + 2
            ideal = build_graph_ideal("cycle", m)
            plan = cycle_sequence(m)
            expected = _trinomial_display(ideal, n)
            closed = ini_transform(ideal, plan.forms[0], plan.order)
            oracle = initial_ideal(ideal, plan.forms[0], plan.order, self.budgets)
            run.expect(
                closed == expected and oracle == expected,
                f"C_{m}: I_1 closed form {closed}, Buchberger {oracle}, expected {expected}",
            )
            report = check_min_prime_transfer(ideal, TransferCase.TRINOMIAL, *plan.forms[0].support)
            run.expect(report.holds, f"C_{m}: trinomial transfer fails: {report.violations}")

        for i in range(self.count("transform-oracle")):
            if run.expired():
                return
            make = (binomial_instance, leaf_pair_instance, trinomial_instance)[i % 3]
            instance = make(rng)
            mismatches: list[str] = []
            for order in instance.orders():
                closed = ini_transform(instance.ideal, instance.form, order)
                oracle = initial_ideal(instance.ideal, instance.form, order, self.budgets)
                if closed != oracle:
                    names = " > ".join(order.names(instance.ideal.ring))
                    mismatches.append(
                        f"under {names}: closed form {closed}, Buchberger {oracle}"
                    )
            run.expect(not mismatches, f"{instance.describe()}: " + "; ".join(mismatches))

    def _check_ass_example(self, run: _CheckRun, rng: random.Random) -> None:
        ideal = parse_ideal_text(ASSOCIATED_EXAMPLE)
        ring = ideal.ring

        def letters(p: MonomialPrime) -> str:
            return "".join(p.names(ring))

        found = {letters(p) for p in associated_primes(ideal)}
        expected = set(EXAMPLE_MINIMAL) | set(EXAMPLE_DECOMPOSITIONS)
        run.expect(found == expected, f"Ass(R/I) = {sorted(found)}, expected {sorted(expected)}")
        minimal = {letters(p) for p in minimal_primes(ideal)}
        run.expect(minimal == set(EXAMPLE_MINIMAL), f"Min(R/I) = {sorted(minimal)}")

        for q_letters, printed in EXAMPLE_DECOMPOSITIONS.items():
            q = MonomialPrime.from_names(ring, list(q_letters))
            decomposition = embedded_decomposition(ideal, q)
            options = {
                (letters(d.minimal_prime), "".join(ring.name(z) for z in d.extra_variables()))
                for d in all_decompositions(ideal, q)
            }
            run.expect(
                decomposition.prime == q and bool(options & set(printed)),
                f"({q_letters}): found {sorted(options)}, expected one of {list(printed)}",
            )

    def _check_embedded_property(self, run: _CheckRun, rng: random.Random) -> None:
        for _ in range(self.count("embedded-property")):
            if run.expired():
                return
            ideal = random_ideal(rng, max_vars=5, max_exponent=3)
            fast = associated_primes(ideal)
            slow = associated_primes_bruteforce(ideal, self.budgets)
            ok = fast == slow
            for q in embedded_primes(ideal):
                ok = ok and embedded_decomposition(ideal, q).prime == q
            run.expect(ok, f"{ideal}: Ass {len(fast)} primes, witness scan {len(slow)}")

    def _check_corollaries(self, run: _CheckRun, rng: random.Random) -> None:
        for _ in range(self.count("corollaries")):
            if run.expired():
                return
            ideal = top_degree_ideal(rng)
            ass = associated_primes(ideal)
            minimal = minimal_primes(ideal)
            run.expect(
                ass == minimal and minimal == minimal_primes(squarefree_part(ideal)),
                f"{ideal}: embedded primes despite top-degree generators",
            )
            power = rng.randint(1, 3)
            run.expect(
                not embedded_primes(bracket_power(ideal, power)),
                f"{ideal}: bracket power {power} has embedded primes",
            )
            form = regular_family(rng, ideal)
            if form is not None:
                run.expect(
                    is_regular_linear_form(ideal, form),
                    f"{ideal}: covering form {form.format(ideal.ring)} is a zero divisor",
                )

    def _check_unicyclic_depth(self, run: _CheckRun, rng: random.Random) -> None:
        ns = self.QUICK_UNICYCLIC_N if self.quick else self.UNICYCLIC_N
        ms = self.QUICK_UNICYCLIC_M if self.quick else self.UNICYCLIC_M
        for n in ns:
            for m in ms:
                if run.expired():
                    return
                ideal = build_graph_ideal("gnm", n, m)
                try:
                    got = self.depth(ideal)
                except BudgetExceeded as e:
                    logger.info("Skipping G_%d,%d: %s", n, m, e)
                    continue
                expected = depth_unicyclic_formula(n, m)
                run.expect(got == expected, f"G_{n},{m}: oracle depth {got}, formula {expected}")

        for t in (1, 2):
            if run.expired():
                return
            plan = unicyclic_sequence(t)
            n = 3 * t + 2
            ideal = build_graph_ideal("gnm", n, 2)
            trace = verify_initially_regular(ideal, plan, Engine.TRANSFORM, self.budgets)
            self._record(plan.provenance, ideal, trace.verified_length)
            depth = self.depth(ideal)
            run.expect(
                trace.verified_length == t + 2 == depth,
                f"G_{n},2: verified {trace.verified_length}, bound {t + 2}, depth {depth}",
            )

    def _check_lower_bound(self, run: _CheckRun, rng: random.Random) -> None:
        if not self.ledger:
            for m in self.QUICK_CYCLE_RANGE:
                ideal = build_graph_ideal("cycle", m)
                trace = verify_initially_regular(ideal, cycle_sequence(m), budgets=self.budgets)
                self._record(f"C_{m}", ideal, trace.verified_length)
            for t in (1, 2):
                ideal = build_graph_ideal("gnm", 3 * t + 2, 2)
                trace = verify_initially_regular(ideal, unicyclic_sequence(t), budgets=self.budgets)
                self._record(f"G_{3 * t + 2},2", ideal, trace.verified_length)

        for entry in self.ledger:
            if run.expired():
                return
            depth = self.depth(entry.ideal)
            run.expect(
                entry.verified_length <= depth,
                f"{entry.label}: verified length {entry.verified_length} exceeds depth {depth}",
            )


def _trinomial_display(ideal: MonomialIdeal, n: int) -> MonomialIdeal:
    """Expected ini(I(C_{3n+2}), x1 + x_{3n+2} + x2).

    (x1, x_i x_{i+1} for 2 <= i <= 3n+1, x_{3n+2} x2, x_{3n+2}^2, x_{3n+1} x2^2)
    """
    last = 3 * n + 2
    gens = ["x1"] + [f"x{i}*x{i + 1}" for i in range(2, last)]
    gens += [f"x{last}*x2", f"x{last}^2", f"x{last - 1}*x2^2"]
    text = "vars " + " ".join(ideal.ring.variables) + "\ngens " + " ".join(gens) + "\n"
    return parse_ideal_text(text)


def run_suite(
    only: Iterable[str] | None = None,
    seed: int = 0,
    timeout: float | None = None,
    quick: bool = False,
    budgets: Budgets | None = None,
) -> list[CheckResult]:
    return CheckSuite(seed, timeout, quick, budgets).run(only)
