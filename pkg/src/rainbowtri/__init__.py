"""Rainbow-triangle counting and color-degree bounds for edge-colored graphs."""

from rainbowtri.bounds import BoundVerdict, TheoremId
from rainbowtri.census import TriangleCensus, count_rainbow_bruteforce, count_rainbow_fast, rt_at_vertex
from rainbowtri.graph import (
    EdgeColoredGraph,
    GraphError,
    VertexColorProfile,
    build_graph,
    min_color_degree,
    mono_order,
    sigma2c,
    vertex_profile,
)
from rainbowtri.reduction import MinimalityReport, check_minimal_structure, edge_minimalize, is_removable

__all__ = [
    "BoundVerdict",
    "EdgeColoredGraph",
    "GraphError",
    "MinimalityReport",
    "TheoremId",
    "TriangleCensus",
    "VertexColorProfile",
    "build_graph",
    "check_minimal_structure",
    "count_rainbow_bruteforce",
    "count_rainbow_fast",
    "edge_minimalize",
    "is_removable",
    "min_color_degree",
    "mono_order",
    "rt_at_vertex",
    "sigma2c",
    "vertex_profile",
]

__version__ = "0.1.0"
