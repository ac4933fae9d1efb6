"""
Homological depth oracle: exact ranks, simplicial homology and Hochster's formula.
"""

from .linear_algebra import matrix_rank, rank_gf2, rank_qq
from .simplicial import (
    SimplicialComplex,
    faces_by_size,
    homology_ranks,
    reduced_homology_from_levels,
    reduced_homology_rank,
)
from .betti import (
    DepthMethod,
    DepthResult,
    HochsterOracle,
    betti_support,
    depth_oracle,
    projective_dimension,
)

__all__ = [
    "matrix_rank",
    "rank_gf2",
    "rank_qq",
    "SimplicialComplex",
    "faces_by_size",
    "homology_ranks",
    "reduced_homology_from_levels",
    "reduced_homology_rank",
    "DepthMethod",
    "DepthResult",
    "HochsterOracle",
    "betti_support",
    "depth_oracle",
    "projective_dimension",
]
