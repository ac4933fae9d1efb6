"""
Edge ideals of cycles, paths and unicyclic graphs.

Graphs are built with networkx. Cycle vertices are named x1..xn, path
vertices y1..ym, and the unicyclic graph G_{n,m} joins the cycle C_n to the
path P_m by the edge x2 - y1.
"""

from __future__ import annotations

import logging
from enum import Enum
from typing import Sequence

import networkx as nx

from monomial_ideal_core.errors import InputError
from monomial_ideal_core.models import Monomial, MonomialIdeal, RingSpec, minimal_generators

logger = logging.getLogger(__name__)


class GraphKind(str, Enum):
    """Graph families with closed depth formulas."""
    CYCLE = "cycle"
    PATH = "path"
    UNICYCLIC = "gnm"


def graph_kind(kind: GraphKind | str) -> GraphKind:
    try:
        return GraphKind(kind)
    except ValueError:
        choices = ", ".join(k.value for k in GraphKind)
        raise InputError(f"unknown graph family {kind!r}, expected one of {choices}") from None


def cycle_graph(n: int) -> nx.Graph:
    if n < 3:
        raise InputError(f"a cycle needs at least 3 vertices, got {n}")
    return nx.relabel_nodes(nx.cycle_graph(n), {i: f"x{i + 1}" for i in range(n)})


def path_graph(p: int, prefix: str = "y") -> nx.Graph:
    if p < 1:
        raise InputError(f"a path needs at least 1 vertex, got {p}")
    return nx.relabel_nodes(nx.path_graph(p), {i: f"{prefix}{i + 1}" for i in range(p)})


def unicyclic_graph(n: int, m: int) -> nx.Graph:
    """G_{n,m}: C_n with the path y1 - ... - ym hanging off x2."""
    if m < 0:
        raise InputError(f"the attached path length must be >= 0, got {m}")
    graph = cycle_graph(n)
    if m == 0:
        return graph
    graph = nx.compose(graph, path_graph(m))
    graph.add_edge("x2", "y1")
    return graph


def graph_variables(graph: nx.Graph) -> list[str]:
    """Vertex names with the x's before the y's, each in numeric order."""
    return sorted(graph.nodes, key=lambda name: (name[0], int(name[1:])))


def edge_ideal(graph: nx.Graph, variables: Sequence[str] | None = None) -> MonomialIdeal:
    """I(G), generated by x_i x_j for every edge; the zero ideal when G has no edges."""
    ring = RingSpec.of(variables if variables is not None else graph_variables(graph))
    if graph.number_of_edges() == 0:
        return MonomialIdeal.zero(ring)
    n = ring.n
    gens = [Monomial.from_support(n, (ring.index(u), ring.index(v))) for u, v in graph.edges]
    return minimal_generators(ring, gens)


def build_graph_ideal(kind: GraphKind | str, *params: int) -> MonomialIdeal:
    """Edge ideal of a named family.

    Args:
        kind: cycle (n), path (p) or gnm (n, m)
        params: Family sizes

    Returns:
        The edge ideal in k[x1..xn, y1..ym]

    Raises:
        InputError: wrong parameter count or sizes outside the family
    """
    kind = graph_kind(kind)
    expected = 2 if kind is GraphKind.UNICYCLIC else 1
    if len(params) != expected:
        raise InputError(f"{kind.value} takes {expected} size parameter(s), got {len(params)}")

    if kind is GraphKind.CYCLE:
        graph = cycle_graph(params[0])
    elif kind is GraphKind.PATH:
        graph = path_graph(params[0])
    else:
        graph = unicyclic_graph(params[0], params[1])

    ideal = edge_ideal(graph)
    logger.debug(
        "Built %s%s: %d variables, %d edges", kind.value, params, ideal.ring.n, len(ideal)
    )
    return ideal
