"""
MonomialIdealCore - exact algorithms for monomial ideals.

This package provides the framework-free core: monomial and ideal arithmetic,
minimal and associated primes, a small Buchberger oracle, closed-form initial
ideals for binomial and trinomial linear forms, and a homological depth oracle.

Key Features:
- Canonical minimal generators with text and JSON exchange formats
- Associated primes via polarization, cross-checked by a witness scan
- Star-neighbor decomposition of embedded primes
- ini(I, f) by closed form or exact Buchberger
- depth(R/I) from Hochster's formula over QQ or GF(2)
"""

__version__ = "0.1.0"

from .errors import (
    BudgetExceeded,
    ConfigurationError,
    InputError,
    MonomialIdealError,
    NoDecomposition,
    NotEmbedded,
    OracleMismatch,
    ParseError,
    PreconditionViolated,
    UnitIdeal,
    VerificationFailed,
    ZeroIdeal,
)
from .settings import Budgets, Field, load_budgets
from .models import LinearForm, Monomial, MonomialIdeal, MonomialPrime, RingSpec, TermOrder
from .serialization import load_ideal, parse_ideal
from .primes import associated_primes, embedded_decomposition, minimal_primes
from .groebner import buchberger, initial_ideal
from .transforms import ini_binomial, ini_transform, ini_trinomial
from .homology import DepthResult, depth_oracle, projective_dimension

__all__ = [
    "BudgetExceeded",
    "ConfigurationError",
    "InputError",
    "MonomialIdealError",
    "NoDecomposition",
    "NotEmbedded",
    "OracleMismatch",
    "ParseError",
    "PreconditionViolated",
    "UnitIdeal",
    "VerificationFailed",
    "ZeroIdeal",
    "Budgets",
    "Field",
    "load_budgets",
    "LinearForm",
    "Monomial",
    "MonomialIdeal",
    "MonomialPrime",
    "RingSpec",
    "TermOrder",
    "load_ideal",
    "parse_ideal",
    "associated_primes",
    "embedded_decomposition",
    "minimal_primes",
    "buchberger",
    "initial_ideal",
    "ini_binomial",
    "ini_transform",
    "ini_trinomial",
    "DepthResult",
    "depth_oracle",
    "projective_dimension",
]
