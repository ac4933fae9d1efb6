"""
Projective dimension and depth through Hochster's formula.

For a squarefree monomial ideal with Stanley-Reisner complex Δ,

    β_{i,σ}(R/I) = dim H̃_{|σ|-i-1}(Δ_σ)

where Δ_σ consists of the subsets of σ containing no generator support.
pd(R/I) is the largest i with some β_{i,σ} != 0. Non-squarefree ideals are
polarized first, which preserves the projective dimension.

Nonzero β_{i,σ} only occur at σ in the lcm lattice (unions of generator
supports); the scan is restricted to those unless told otherwise. Subsets
are visited by decreasing size, and a subset no larger than the best pd so
far cannot improve it.
"""

from __future__ import annotations

import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from enum import Enum
from typing import Any, Sequence

from ..errors import BudgetExceeded
from ..models import MonomialIdeal, RingSpec
from ..primes import polarize
from ..settings import Budgets, Field, load_budgets
from .simplicial import faces_by_size, reduced_homology_from_levels

logger = logging.getLogger(__name__)


class DepthMethod(str, Enum):
    """How a depth value was obtained."""
    FORMULA = "formula"
    ORACLE = "oracle"


@dataclass(frozen=True)
class DepthResult:
    """
    depth(R/I) together with how it was obtained.

    Attributes:
        value: The depth, between 0 and the number of variables
        method: Closed formula or homological oracle
        witness: For the oracle, (pd, multidegree σ with β_{pd,σ} != 0)
        field: Coefficient field used by the oracle
    """

    value: int
    method: DepthMethod
    witness: tuple[int, tuple[str, ...]] | None = None
    field: Field | None = None

    def to_json(self) -> dict[str, Any]:
        data: dict[str, Any] = {"depth": self.value, "method": self.method.value}
        if self.witness is not None:
            data["pd"] = self.witness[0]
            data["multidegree"] = list(self.witness[1])
        if self.field is not None:
            data["field"] = self.field.value
        return data


def _mask_names(ring: RingSpec, mask: int) -> tuple[str, ...]:
    return tuple(ring.name(i) for i in range(ring.n) if mask >> i & 1)


def _lcm_lattice(gens: Sequence[int]) -> set[int]:
    unions = {0}
    for g in gens:
        unions |= {u | g for u in unions}
    return unions


def _top_betti_index(gens: Sequence[int], sigma: int, floor: int, field: Field) -> int:
    """Largest i > floor with β_{i,σ} != 0, or -1 when there is none."""
    size = bin(sigma).count("1")
    if size <= floor:
        return -1
    vertices = [v for v in range(sigma.bit_length()) if sigma >> v & 1]
    inside = [g for g in gens if g & sigma == g]
    by_vertex = {v: [g for g in inside if g >> v & 1] for v in vertices}

    def is_face(face: int, v: int) -> bool:
        return not any(g & face == g for g in by_vertex[v])

    # i = size - j - 1 > floor means j < size - floor - 1
    top_dim = size - floor - 2
    levels = faces_by_size(vertices, is_face, top_dim + 2)
    ranks = reduced_homology_from_levels(levels, range(-1, top_dim + 1), field)
    for j in range(-1, top_dim + 1):
        if ranks[j]:
            return size - j - 1
    return -1


def _scan(
    gens: Sequence[int], sigmas: Sequence[int], floor: int, field: Field
) -> tuple[int, int]:
    best, witness = floor, -1
    for sigma in sigmas:
        if bin(sigma).count("1") <= best:
            break
        i = _top_betti_index(gens, sigma, best, field)
        if i > best:
            best, witness = i, sigma
    return best, witness


def _scan_chunk(args: tuple[Sequence[int], Sequence[int], int, Field]) -> tuple[int, int]:
    return _scan(*args)


class HochsterOracle:
    """
    Projective dimension of R/I from reduced homology of induced subcomplexes.
    """

    # Subsets handed to one worker process
    CHUNK_SIZE = 256

    def __init__(
        self,
        budgets: Budgets | None = None,
        restrict_to_lcm_lattice: bool = True,
        workers: int | None = None,
    ) -> None:
        """
        Args:
            budgets: Oracle budgets; polarized_variables caps the ring size and
                field picks the homology coefficients
            restrict_to_lcm_lattice: Only visit unions of generator supports
            workers: Fan the subset scan out over this many processes
        """
        self.budgets = budgets or load_budgets()
        self.restrict_to_lcm_lattice = restrict_to_lcm_lattice
        self.workers = workers

    @property
    def field(self) -> Field:
        return self.budgets.field

    def _prepare(self, ideal: MonomialIdeal) -> tuple[RingSpec, list[int]]:
        if ideal.is_squarefree:
            ring, gens = ideal.ring, [g.support_mask() for g in ideal.gens]
            used = len(ideal.used_variables())
        else:
            polarized, pmap = polarize(ideal)
            ring, gens = pmap.target, [g.support_mask() for g in polarized.gens]
            used = ring.n
        limit = self.budgets.polarized_variables
        if used > limit:
            raise BudgetExceeded("polarized_variables", limit, used)
        return ring, gens

    def _candidates(self, ring: RingSpec, gens: list[int]) -> list[int]:
        if self.restrict_to_lcm_lattice:
            sigmas = _lcm_lattice(gens)
        else:
            sigmas = set(range(1 << ring.n))
        sigmas.discard(0)
        return sorted(sigmas, key=lambda s: (-bin(s).count("1"), s))

    def scan(self, ideal: MonomialIdeal) -> tuple[int, tuple[str, ...]]:
        """pd(R/I) and the first multidegree (largest first) attaining it."""
        if ideal.is_zero:
            return 0, ()
        ring, gens = self._prepare(ideal)
        sigmas = self._candidates(ring, gens)
        logger.debug("Hochster scan over %d multidegrees in %d variables", len(sigmas), ring.n)

        if self.workers and self.workers > 1 and len(sigmas) > self.CHUNK_SIZE:
            chunks = [
                sigmas[k:k + self.CHUNK_SIZE] for k in range(0, len(sigmas), self.CHUNK_SIZE)
            ]
            with ProcessPoolExecutor(max_workers=self.workers) as pool:
                results = list(pool.map(_scan_chunk, [(gens, c, 0, self.field) for c in chunks]))
            order = {s: k for k, s in enumerate(sigmas)}
            found = [(i, s) for i, s in results if s >= 0]
            best, witness = max(found, key=lambda r: (r[0], -order[r[1]]), default=(0, -1))
        else:
            best, witness = _scan(gens, sigmas, 0, self.field)

        names = _mask_names(ring, witness) if witness >= 0 else ()
        logger.info("pd(R/I) = %d (multidegree %s, %s)", best, names, self.field.value)
        return best, names

    def projective_dimension(self, ideal: MonomialIdeal) -> int:
        return self.scan(ideal)[0]

    def betti_support(self, ideal: MonomialIdeal) -> list[tuple[str, ...]]:
        """All multidegrees σ with β_{pd,σ} != 0, in scan order."""
        pd = self.projective_dimension(ideal)
        if ideal.is_zero:
            return [()]
        ring, gens = self._prepare(ideal)
        support = []
        for sigma in self._candidates(ring, gens):
            if bin(sigma).count("1") < pd:
                break
            if _top_betti_index(gens, sigma, pd - 1, self.field) == pd:
                support.append(_mask_names(ring, sigma))
        return support

    def depth(self, ideal: MonomialIdeal) -> DepthResult:
        pd, sigma = self.scan(ideal)
        return DepthResult(ideal.ring.n - pd, DepthMethod.ORACLE, (pd, sigma), self.field)


def projective_dimension(
    ideal: MonomialIdeal,
    budgets: Budgets | None = None,
    restrict_to_lcm_lattice: bool = True,
    workers: int | None = None,
) -> int:
    """pd(R/I) by Hochster's formula.

    Raises:
        BudgetExceeded: when the polarization has more than polarized_variables variables
    """
    return HochsterOracle(budgets, restrict_to_lcm_lattice, workers).projective_dimension(ideal)


def depth_oracle(
    ideal: MonomialIdeal,
    budgets: Budgets | None = None,
    restrict_to_lcm_lattice: bool = True,
    workers: int | None = None,
) -> DepthResult:
    """depth(R/I) = n - pd(R/I); the zero ideal has depth n."""
    return HochsterOracle(budgets, restrict_to_lcm_lattice, workers).depth(ideal)


def betti_support(ideal: MonomialIdeal, budgets: Budgets | None = None) -> list[tuple[str, ...]]:
    return HochsterOracle(budgets).betti_support(ideal)
