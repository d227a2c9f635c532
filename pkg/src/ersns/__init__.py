"""Edge-regular graphs and their shared neighbourhood structures.

Small undirected graphs are stored as bitmask rows (``n <= 62``).  The
package classifies graphs as edge-regular / strongly regular / regular clique
assemblies, computes the induced subgraph on the common neighbours of every
edge, generates ER(n, d, lambda) graphs up to isomorphism, and runs the
empirical checks in :mod:`ersns.theorems`.
"""

from .enumerate import EnumResult, EnumSpec, SearchStats, enumerate_er, er_parameter_feasible
from .formats import Graph6Error, export_dot, parse_graph6, write_graph6
from .graph import (
    MAX_VERTICES,
    Graph,
    GraphError,
    NamedGraphSpec,
    SizeCeilingError,
    build_graph,
    common_neighborhood,
    complement,
    connected_components,
    disjoint_sum,
    empty_graph,
    girth,
    induced_subgraph,
    m_copies,
    named_graph,
    neighborhood,
)
from .iso import CanonicalForm, are_isomorphic, canonical_form, canonical_graph, canonical_labeling, isomorphic
from .products import ProductVertexMap, cartesian, shadow, tensor
from .regularity import (
    ERParams,
    RCAParams,
    SNSClass,
    SNSReport,
    SRParams,
    classify_er,
    classify_rca,
    classify_sr,
    clique_number,
    is_component_regular,
    maximal_cliques,
    sns,
    sns_report,
)

__version__ = "0.1.0"

__all__ = [
    "CanonicalForm", "ERParams", "EnumResult", "EnumSpec", "Graph", "Graph6Error", "GraphError",
    "MAX_VERTICES", "NamedGraphSpec", "ProductVertexMap", "RCAParams", "SNSClass", "SNSReport",
    "SRParams", "SearchStats", "SizeCeilingError", "are_isomorphic", "build_graph",
    "canonical_form", "canonical_graph", "canonical_labeling", "cartesian", "classify_er",
    "classify_rca", "classify_sr", "clique_number", "common_neighborhood", "complement",
    "connected_components", "disjoint_sum", "empty_graph", "enumerate_er",
    "er_parameter_feasible", "export_dot", "girth", "induced_subgraph", "is_component_regular",
    "isomorphic", "m_copies", "maximal_cliques", "named_graph", "neighborhood", "parse_graph6",
    "shadow", "sns", "sns_report", "tensor", "write_graph6",
]
