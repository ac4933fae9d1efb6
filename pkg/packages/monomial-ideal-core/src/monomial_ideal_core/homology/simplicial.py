"""
Finite simplicial complexes and their reduced homology.

Faces are vertex bitmasks. Reduced homology includes the empty face in
dimension -1, so the complex {∅} has H̃_{-1} of rank 1.
"""

from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass
from typing import Callable, Iterable, Sequence

from ..settings import Field
from .linear_algebra import matrix_rank

logger = logging.getLogger(__name__)


def _bits(mask: int) -> list[int]:
    return [i for i in range(mask.bit_length()) if mask >> i & 1]


def faces_by_size(
    vertices: Sequence[int], is_face: Callable[[int, int], bool], max_size: int
) -> list[list[int]]:
    """Faces grouped by number of vertices, built level by level.

    Args:
        vertices: Vertex indices of the ground set
        is_face: Predicate (face mask, newly added vertex) for a candidate whose
            every codimension-one subface is already a face
        max_size: Largest face size to enumerate

    Returns:
        levels[k] lists the faces with k vertices; levels[0] is [0] (the empty face)
    """
    levels: list[list[int]] = [[0]]
    for k in range(1, max_size + 1):
        level = []
        for face in levels[-1]:
            top = face.bit_length()
            for v in vertices:
                if v < top:
                    continue
                candidate = face | (1 << v)
                if is_face(candidate, v):
                    level.append(candidate)
        if not level:
            break
        levels.append(level)
    return levels


def _boundary_rows(faces: list[int], lower: list[int]) -> list[dict[int, int]]:
    index = {f: i for i, f in enumerate(lower)}
    rows = []
    for face in faces:
        row = {}
        for k, v in enumerate(_bits(face)):
            row[index[face ^ (1 << v)]] = -1 if k % 2 else 1
        rows.append(row)
    return rows


def reduced_homology_from_levels(
    levels: list[list[int]], dims: Iterable[int], field: Field = Field.QQ
) -> dict[int, int]:
    """Ranks of H̃_j for j in `dims` from faces grouped by size.

    levels must reach size max(dims) + 2 when such faces exist.
    """
    rank_cache: dict[int, int] = {}

    def boundary_rank(size: int) -> int:
        # Rank of the boundary map from faces with `size` vertices.
        if size not in rank_cache:
            if size <= 0 or size >= len(levels):
                rank_cache[size] = 0
            else:
                rows = _boundary_rows(levels[size], levels[size - 1])
                rank_cache[size] = matrix_rank(rows, field)
        return rank_cache[size]

    result = {}
    for j in dims:
        size = j + 1
        count = len(levels[size]) if 0 <= size < len(levels) else 0
        result[j] = count - boundary_rank(size) - boundary_rank(size + 1)
    return result


@dataclass(frozen=True)
class SimplicialComplex:
    """
    Simplicial complex given by its facets.

    Attributes:
        n_vertices: Size of the vertex ground set
        facets: Maximal faces as vertex bitmasks; no facet contains another
    """

    n_vertices: int
    facets: frozenset[int]

    @classmethod
    def from_facets(cls, n_vertices: int, facets: Iterable[Iterable[int]]) -> SimplicialComplex:
        masks = set()
        for facet in facets:
            mask = 0
            for v in facet:
                if not 0 <= v < n_vertices:
                    raise ValueError(f"vertex {v} outside 0..{n_vertices - 1}")
                mask |= 1 << v
            masks.add(mask)
        maximal = {m for m in masks if not any(o != m and o & m == m for o in masks)}
        return cls(n_vertices, frozenset(maximal))

    @classmethod
    def simplex(cls, n_vertices: int) -> SimplicialComplex:
        return cls(n_vertices, frozenset([(1 << n_vertices) - 1]))

    @property
    def dimension(self) -> int:
        if not self.facets:
            return -2
        return max(bin(f).count("1") for f in self.facets) - 1

    def is_face(self, mask: int) -> bool:
        return any(mask & f == mask for f in self.facets)

    def faces(self, dim: int) -> list[int]:
        """Faces of the given dimension, sorted."""
        found: set[int] = set()
        for facet in self.facets:
            for combo in itertools.combinations(_bits(facet), dim + 1):
                found.add(sum(1 << v for v in combo))
        return sorted(found)

    def levels(self) -> list[list[int]]:
        return [self.faces(d) for d in range(-1, self.dimension + 1)]


def homology_ranks(complex_: SimplicialComplex, field: Field = Field.QQ) -> list[int]:
    """Reduced homology ranks in dimensions 0..dim K.

    Args:
        complex_: A nonvoid simplicial complex
        field: QQ or GF2 coefficients

    Returns:
        ranks[j] = dim H̃_j(K); the void complex and {∅} give []
    """
    if complex_.dimension < 0:
        return []
    levels = complex_.levels()
    ranks = reduced_homology_from_levels(levels, range(0, complex_.dimension + 1), field)
    logger.debug("Homology ranks %s over %s", ranks, field.value)
    return [ranks[j] for j in range(complex_.dimension + 1)]


def reduced_homology_rank(complex_: SimplicialComplex, dim: int, field: Field = Field.QQ) -> int:
    """dim H̃_dim(K), including dim = -1."""
    if complex_.dimension < -1:
        return 0
    return reduced_homology_from_levels(complex_.levels(), [dim], field)[dim]
