"""
Closed depth formulas for edge ideals of cycles, paths and unicyclic graphs.
"""

from __future__ import annotations

from monomial_ideal_core.errors import InputError
from monomial_ideal_core.homology import DepthMethod, DepthResult

from .graph_ideals import GraphKind, graph_kind


def _ceil_div(a: int, b: int) -> int:
    return -(-a // b)


def depth_cycle_formula(n: int) -> int:
    """depth(R/I(C_n)) = ceil((n - 1) / 3)."""
    if n < 3:
        raise InputError(f"a cycle needs at least 3 vertices, got {n}")
    return _ceil_div(n - 1, 3)


def depth_path_formula(p: int) -> int:
    """depth(R/I(P_p)) = ceil(p / 3) for the path on p vertices."""
    if p < 1:
        raise InputError(f"a path needs at least 1 vertex, got {p}")
    return _ceil_div(p, 3)


def depth_unicyclic_formula(n: int, m: int) -> int:
    """depth(R/I(G_{n,m})), by the residue of m modulo 3.

    m = 0 mod 3: ceil((n - 1) / 3) + m / 3
    m = 1 mod 3: ceil(n / 3) + (m - 1) / 3
    m = 2 mod 3: ceil((n - 1) / 3) + (m + 1) / 3
    """
    if n < 3:
        raise InputError(f"a cycle needs at least 3 vertices, got {n}")
    if m < 0:
        raise InputError(f"the attached path length must be >= 0, got {m}")
    residue = m % 3
    if residue == 0:
        return _ceil_div(n - 1, 3) + m // 3
    if residue == 1:
        return _ceil_div(n, 3) + (m - 1) // 3
    return _ceil_div(n - 1, 3) + (m + 1) // 3


def formula_depth(kind: GraphKind | str, *params: int) -> DepthResult:
    """DepthResult from the closed formula of a graph family."""
    kind = graph_kind(kind)
    expected = 2 if kind is GraphKind.UNICYCLIC else 1
    if len(params) != expected:
        raise InputError(f"{kind.value} takes {expected} size parameter(s), got {len(params)}")
    if kind is GraphKind.CYCLE:
        value = depth_cycle_formula(params[0])
    elif kind is GraphKind.PATH:
        value = depth_path_formula(params[0])
    else:
        value = depth_unicyclic_formula(params[0], params[1])
    return DepthResult(value, DepthMethod.FORMULA)
