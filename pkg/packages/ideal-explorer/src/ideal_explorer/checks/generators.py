"""
Seeded random instance generators for the check suite.

Every generator takes a random.Random so a suite run is reproducible from its
seed. Instances that must satisfy a precondition are built to satisfy it
rather than filtered, except for the binomial leaf and leaf-pair contexts,
where the constructed candidate is re-checked after minimalization.
"""

from __future__ import annotations

import logging
import random
from dataclasses import dataclass

from monomial_ideal_core.errors import MonomialIdealError
from monomial_ideal_core.models import (
    CompletionStrategy,
    LinearForm,
    Monomial,
    MonomialIdeal,
    RingSpec,
    TermOrder,
)
from monomial_ideal_core.primes import regular_form_family_condition
from monomial_ideal_core.transforms import binomial_context

logger = logging.getLogger(__name__)

MAX_ATTEMPTS = 200

# (d_a, d_b, d_c) of a generator compatible with the trinomial closed form
TRINOMIAL_PATTERNS = ((1, 1, 0), (1, 0, 1), (0, 1, 0), (0, 0, 1), (0, 0, 0))


def ring_of(n: int) -> RingSpec:
    return RingSpec.of([f"x{i}" for i in range(1, n + 1)])


def _random_monomial(rng: random.Random, n: int, max_exponent: int, skip: set[int]) -> list[int]:
    return [0 if i in skip else rng.randint(0, max_exponent) for i in range(n)]


def random_ideal(
    rng: random.Random, max_vars: int = 5, max_exponent: int = 3, max_gens: int = 5
) -> MonomialIdeal:
    """Nonzero ideal with 2..max_vars variables and 1..max_gens generators."""
    n = rng.randint(2, max_vars)
    gens = []
    for _ in range(rng.randint(1, max_gens)):
        exps = _random_monomial(rng, n, max_exponent, set())
        if not any(exps):
            exps[rng.randrange(n)] = 1
        gens.append(Monomial(tuple(exps)))
    return MonomialIdeal.from_gens(ring_of(n), gens)


def top_degree_ideal(rng: random.Random, max_vars: int = 5, max_gens: int = 5) -> MonomialIdeal:
    """Ideal in which every variable appears only at its top degree."""
    n = rng.randint(2, max_vars)
    tops = [rng.randint(1, 3) for _ in range(n)]
    gens = []
    for _ in range(rng.randint(1, max_gens)):
        support = [i for i in range(n) if rng.random() < 0.5] or [rng.randrange(n)]
        gens.append(Monomial(tuple(tops[i] if i in support else 0 for i in range(n))))
    return MonomialIdeal.from_gens(ring_of(n), gens)


def regular_family(rng: random.Random, ideal: MonomialIdeal) -> LinearForm | None:
    """b_0 + ... + b_t covering every generator that b_0 divides, or None.

    None when the chosen b_0 has a generator that is a pure power of b_0.
    """
    n = ideal.ring.n
    b0 = rng.choice(ideal.used_variables())
    others: set[int] = set()
    for m in ideal.divisible_by(b0):
        candidates = [v for v in m.support() if v != b0]
        if not candidates:
            return None
        if not others.intersection(candidates):
            others.add(rng.choice(candidates))
    others.update(v for v in range(n) if v != b0 and rng.random() < 0.2)
    if not others:
        others.add(rng.choice([v for v in range(n) if v != b0]))
    if not regular_form_family_condition(ideal, b0, sorted(others)):
        return None
    return LinearForm((b0, *sorted(others)))


@dataclass(frozen=True)
class TransformInstance:
    """
    An ideal with a binomial or trinomial form and a lex order for it.

    Attributes:
        ideal: Monomial ideal satisfying the closed form's preconditions
        variables: (a, b) or (a, b, c), highest first
        order: Lex order with a > b (> c)
    """

    ideal: MonomialIdeal
    variables: tuple[int, ...]
    order: TermOrder

    @property
    def form(self) -> LinearForm:
        return LinearForm(self.variables)

    def orders(self, k: int = 3) -> list[TermOrder]:
        """Up to k distinct lex completions of the instance chain, its own order first."""
        ring = self.ideal.ring
        chain = [[ring.name(v) for v in self.variables]]
        found = [self.order]
        for strategy in CompletionStrategy:
            order = TermOrder.complete(ring, chain, strategy)
            if len(found) < k and order not in found:
                found.append(order)
        return found

    def describe(self) -> str:
        ring = self.ideal.ring
        return f"{self.ideal} with {' + '.join(ring.name(v) for v in self.variables)}"


def _instance(ideal: MonomialIdeal, variables: tuple[int, ...]) -> TransformInstance:
    ring = ideal.ring
    order = TermOrder.complete(ring, [[ring.name(v) for v in variables]])
    return TransformInstance(ideal, variables, order)


def binomial_instance(
    rng: random.Random, max_vars: int = 6, max_gens: int = 6
) -> TransformInstance:
    """Ideal where a is a leaf whose generator is divisible by ab."""
    for _ in range(MAX_ATTEMPTS):
        n = rng.randint(2, max_vars)
        a, b = rng.sample(range(n), 2)
        leaf = _random_monomial(rng, n, 2, {a})
        leaf[a] = rng.randint(1, 3)
        leaf[b] = max(leaf[b], 1)
        gens = [Monomial(tuple(leaf))]
        for _ in range(rng.randint(0, max_gens - 1)):
            exps = _random_monomial(rng, n, 2, {a})
            if any(exps):
                gens.append(Monomial(tuple(exps)))
        ideal = MonomialIdeal.from_gens(ring_of(n), gens)
        if binomial_context(ideal, a, b) is not None:
            return _instance(ideal, (a, b))
    raise MonomialIdealError(f"no binomial instance after {MAX_ATTEMPTS} attempts")


def leaf_pair_instance(
    rng: random.Random, max_vars: int = 6, max_gens: int = 5
) -> TransformInstance:
    """Ideal where a and b form a leaf pair through generators a*x, x*y and y*b.

    The other generators avoid a and b; the candidate is re-checked because
    one of them can still make a or b a non-leaf after minimalization.
    """
    for _ in range(MAX_ATTEMPTS):
        n = rng.randint(4, max_vars)
        a, x, y, b = rng.sample(range(n), 4)
        s, t = rng.randint(1, 2), rng.randint(1, 2)
        leaf_a = [0] * n
        leaf_a[a], leaf_a[x] = rng.randint(1, 3), s
        leaf_b = [0] * n
        leaf_b[b], leaf_b[y] = rng.randint(1, 3), t
        bridge = [0] * n
        bridge[x], bridge[y] = rng.randint(1, s), rng.randint(1, t)
        gens = [Monomial(tuple(leaf_a)), Monomial(tuple(leaf_b)), Monomial(tuple(bridge))]
        for _ in range(rng.randint(0, max_gens - 3)):
            exps = _random_monomial(rng, n, 2, {a, b})
            if any(exps):
                gens.append(Monomial(tuple(exps)))
        ideal = MonomialIdeal.from_gens(ring_of(n), gens)
        if binomial_context(ideal, a, b) == "leaf_pair":
            return _instance(ideal, (a, b))
    raise MonomialIdealError(f"no leaf-pair instance after {MAX_ATTEMPTS} attempts")


def trinomial_instance(
    rng: random.Random, max_vars: int = 6, max_gens: int = 6
) -> TransformInstance:
    """Ideal satisfying every trinomial precondition for a > b > c.

    Each generator takes its (a, b, c) exponents from TRINOMIAL_PATTERNS; the
    conditions only restrict generators, so they survive minimalization.
    """
    n = rng.randint(3, max_vars)
    a, b, c = rng.sample(range(n), 3)
    gens = []
    for _ in range(rng.randint(1, max_gens)):
        exps = _random_monomial(rng, n, 2, {a, b, c})
        exps[a], exps[b], exps[c] = rng.choice(TRINOMIAL_PATTERNS)
        if any(exps):
            gens.append(Monomial(tuple(exps)))
    if not gens:
        gens.append(Monomial.from_support(n, (a, b)))
    return _instance(MonomialIdeal.from_gens(ring_of(n), gens), (a, b, c))
