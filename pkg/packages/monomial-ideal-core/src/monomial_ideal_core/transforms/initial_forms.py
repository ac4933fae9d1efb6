"""
Closed forms for ini(I, f) with f a binomial or trinomial linear form.

Binomial a + b with a > b:

    ini(I, a + b) = (a, b^{d_a(M)} M / a^{d_a(M)} : M in G(I))

Trinomial a + b + c with a > b > c, when d_a, d_b, d_c <= 1, every generator
with a also has b or c, and no generator is divisible by bc:

    ini(I, a + b + c) = (a, M^, lcm(X, M') c^2 : M, bX, acM' in G(I))

where M^ replaces a by b in generators divisible by a and is M otherwise.
"""

from __future__ import annotations

import logging

from ..errors import InputError, OracleMismatch, PreconditionViolated
from ..groebner import initial_ideal
from ..models import (
    LinearForm,
    Monomial,
    MonomialIdeal,
    TermOrder,
    minimal_generators,
    var_degrees,
)
from ..settings import Budgets
from .leaves import is_leaf_pair, leaf_generators

logger = logging.getLogger(__name__)


def binomial_context(ideal: MonomialIdeal, a: int, b: int) -> str | None:
    """Name of the validated context for ini(I, a + b), or None.

    "leaf" when a is a leaf whose generator is divisible by ab, "leaf_pair"
    when a, b form a leaf pair.
    """
    leaves = leaf_generators(ideal)
    if a in leaves and leaves[a].exponents[b] > 0:
        return "leaf"
    if a in leaves and b in leaves and is_leaf_pair(ideal, a, b):
        return "leaf_pair"
    return None


def _binomial_formula(ideal: MonomialIdeal, a: int, b: int) -> MonomialIdeal:
    n = ideal.ring.n
    gens = [Monomial.variable(n, a)]
    for m in ideal.gens:
        r = m.exponents[a]
        if r:
            m = m.replace(a, 0).replace(b, m.exponents[b] + r)
        gens.append(m)
    return minimal_generators(ideal.ring, gens)


def ini_binomial(
    ideal: MonomialIdeal,
    a: int,
    b: int,
    *,
    override: bool = False,
    order: TermOrder | None = None,
    budgets: Budgets | None = None,
) -> MonomialIdeal:
    """ini(I, a + b) for a term order with a > b.

    Args:
        ideal: Nonzero monomial ideal
        a: Larger variable of the binomial
        b: Smaller variable of the binomial
        override: Allow instances outside the leaf and leaf-pair contexts; the
            result is then checked against Buchberger before it is returned
        order: Lex order used for the check (a > b completed by default)
        budgets: Budgets for the Buchberger check

    Returns:
        The initial ideal, minimally generated

    Raises:
        PreconditionViolated: context check failed and no override was given
        OracleMismatch: the override result disagrees with Buchberger
    """
    ideal.require_nonzero("ini_binomial")
    if a == b:
        raise InputError("a binomial needs two distinct variables")
    result = _binomial_formula(ideal, a, b)
    if binomial_context(ideal, a, b) is not None:
        return result
    if not override:
        ring = ideal.ring
        raise PreconditionViolated(
            "leaf or leaf pair",
            f"{ring.name(a)} is neither a leaf with {ring.name(a)}{ring.name(b)} dividing "
            f"its generator nor half of a leaf pair with {ring.name(b)}",
        )

    ring = ideal.ring
    order = order or TermOrder.complete(ring, [[ring.name(a), ring.name(b)]])
    oracle = initial_ideal(ideal, LinearForm((a, b)), order, budgets)
    if oracle != result:
        raise OracleMismatch(
            f"ini(I, {ring.name(a)}+{ring.name(b)}): formula {result} vs oracle {oracle}"
        )
    logger.info("Override binomial transform confirmed by Buchberger")
    return result


def check_trinomial_conditions(ideal: MonomialIdeal, a: int, b: int, c: int) -> None:
    """Raise PreconditionViolated naming the first failed trinomial condition."""
    ring = ideal.ring
    if len({a, b, c}) != 3:
        raise InputError("a trinomial needs three distinct variables")
    degrees = var_degrees(ideal)
    for v in (a, b, c):
        if degrees[v] > 1:
            raise PreconditionViolated("a", f"d_{ring.name(v)}(I) = {degrees[v]} > 1")
    for m in ideal.gens:
        if m.exponents[a] and not (m.exponents[b] or m.exponents[c]):
            raise PreconditionViolated(
                "b", f"generator {m.format(ring)} has {ring.name(a)} but neither "
                f"{ring.name(b)} nor {ring.name(c)}",
            )
    for m in ideal.gens:
        if m.exponents[b] and m.exponents[c]:
            raise PreconditionViolated(
                "bc", f"generator {m.format(ring)} is divisible by {ring.name(b)}{ring.name(c)}"
            )


def ini_trinomial(ideal: MonomialIdeal, a: int, b: int, c: int) -> MonomialIdeal:
    """ini(I, a + b + c) for a term order with a > b > c.

    Raises:
        PreconditionViolated: condition "a", "b" or "bc" does not hold
    """
    ideal.require_nonzero("ini_trinomial")
    check_trinomial_conditions(ideal, a, b, c)
    n = ideal.ring.n
    gens = [Monomial.variable(n, a)]
    b_quotients = []
    ac_quotients = []
    for m in ideal.gens:
        if m.exponents[a]:
            gens.append(m.replace(a, 0).replace(b, m.exponents[b] + 1))
            if m.exponents[c]:
                ac_quotients.append(m.replace(a, 0).replace(c, 0))
        else:
            gens.append(m)
        if m.exponents[b]:
            b_quotients.append(m.replace(b, 0))
    c_squared = Monomial.variable(n, c, 2)
    for x in b_quotients:
        for rest in ac_quotients:
            gens.append(x.lcm(rest) * c_squared)
    return minimal_generators(ideal.ring, gens)


def ini_transform(ideal: MonomialIdeal, form: LinearForm, order: TermOrder) -> MonomialIdeal | None:
    """Closed-form ini(I, f) when f has two or three variables in a valid context.

    Returns:
        The initial ideal, or None when no closed form applies and the caller
        must fall back to Buchberger
    """
    form.check_ring(ideal.ring)
    support = order.sort_variables(form.support)
    if len(support) == 2:
        a, b = support
        if binomial_context(ideal, a, b) is None:
            return None
        return ini_binomial(ideal, a, b)
    if len(support) == 3:
        a, b, c = support
        try:
            check_trinomial_conditions(ideal, a, b, c)
        except PreconditionViolated as e:
            logger.debug("Trinomial closed form does not apply: %s", e)
            return None
        return ini_trinomial(ideal, a, b, c)
    return None
