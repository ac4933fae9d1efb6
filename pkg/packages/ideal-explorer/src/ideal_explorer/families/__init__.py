"""
Graph families, their edge ideals and closed depth formulas.
"""

from .graph_ideals import (
    GraphKind,
    build_graph_ideal,
    graph_kind,
    cycle_graph,
    edge_ideal,
    graph_variables,
    path_graph,
    unicyclic_graph,
)
from .depth_formulas import (
    depth_cycle_formula,
    depth_path_formula,
    depth_unicyclic_formula,
    formula_depth,
)

__all__ = [
    "GraphKind",
    "build_graph_ideal",
    "graph_kind",
    "cycle_graph",
    "edge_ideal",
    "graph_variables",
    "path_graph",
    "unicyclic_graph",
    "depth_cycle_formula",
    "depth_path_formula",
    "depth_unicyclic_formula",
    "formula_depth",
]
