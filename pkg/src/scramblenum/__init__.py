"""Exact scramble number, disjoint scramble number and screewidth of small multigraphs."""

from .errors import GraphError, SearchLimitError, SizeLimitError
from .multigraph import Multigraph, edge_connectivity
from .scramble import Scramble, order
from .screewidth import TreeCutDecomposition, screewidth_exact, width
from .sn_solver import classify_sn_le_2, dsn_exact, is_k_scramble_minimal, sn_exact
from .topo_minor import find_topological_minor, is_multi_topological_minor

__version__ = "0.1.0"

__all__ = [
    "GraphError",
    "Multigraph",
    "Scramble",
    "SearchLimitError",
    "SizeLimitError",
    "TreeCutDecomposition",
    "classify_sn_le_2",
    "dsn_exact",
    "edge_connectivity",
    "find_topological_minor",
    "is_k_scramble_minimal",
    "is_multi_topological_minor",
    "order",
    "screewidth_exact",
    "sn_exact",
    "width",
]
