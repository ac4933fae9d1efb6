"""
Exact Gröbner oracle for a monomial ideal plus one linear form.
"""

from .polynomial import Polynomial
from .buchberger import (
    BuchbergerEngine,
    GroebnerBasis,
    buchberger,
    initial_ideal,
    reduce,
    s_polynomial,
)

__all__ = [
    "Polynomial",
    "BuchbergerEngine",
    "GroebnerBasis",
    "buchberger",
    "initial_ideal",
    "reduce",
    "s_polynomial",
]
