"""Proper coloring of hypergraphs through their 1-intersection graph.

The 1-intersection graph of a hypergraph has one vertex per hyperedge and
joins two hyperedges exactly when they share a single vertex.  This package
provides constructive colorers driven by that graph (a 2-colorer for the
bipartite case, a 4-colorer for the 4-chromatic case, and a greedy (k+1)
colorer), exact chromatic-number oracles, generators for the extremal
families, and a seeded randomized audit harness for the open even-case
conjecture.
"""

from .color import FourColorResult, four_color, greedy_color, two_color
from .core import (
    EdgeClassColoring,
    Hypergraph,
    IntersectionGraph,
    RecoloringTrace,
    RepairRound,
    RepairStep,
    VertexColoring,
    build_hypergraph,
    is_proper,
    one_intersection_graph,
    subhypergraph,
)
from .exact import (
    GRAPH_CAP,
    VERTEX_CAP,
    OddCycle,
    bipartition,
    graph_chromatic_number,
    graph_k_coloring,
    hypergraph_chromatic_number,
    hypergraph_k_coloring,
)
from .errors import (
    EdgeTooSmall,
    FormatError,
    HypercolorError,
    InternalInvariantViolation,
    InvalidClasses,
    LimitExceeded,
    NoFreeColor,
    NotBipartiteIntersection,
    NotFourColorableIntersection,
    OddOrder,
    Unsatisfiable,
    VertexOutOfRange,
)
from .formats import (
    emit_coloring,
    emit_hypergraph,
    parse_coloring,
    parse_hypergraph,
    read_coloring,
    read_hypergraph,
)
from .gen import (
    complete_graph,
    complete_plus_triple,
    fano_plane,
    random_hypergraph,
    universal_vertex_family,
)
from .kernels import BACKEND

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "EdgeClassColoring",
    "EdgeTooSmall",
    "FormatError",
    "FourColorResult",
    "GRAPH_CAP",
    "Hypergraph",
    "HypercolorError",
    "InternalInvariantViolation",
    "IntersectionGraph",
    "InvalidClasses",
    "LimitExceeded",
    "NoFreeColor",
    "NotBipartiteIntersection",
    "NotFourColorableIntersection",
    "OddCycle",
    "OddOrder",
    "RecoloringTrace",
    "RepairRound",
    "RepairStep",
    "Unsatisfiable",
    "VERTEX_CAP",
    "VertexColoring",
    "VertexOutOfRange",
    "bipartition",
    "build_hypergraph",
    "complete_graph",
    "complete_plus_triple",
    "emit_coloring",
    "emit_hypergraph",
    "fano_plane",
    "four_color",
    "graph_chromatic_number",
    "graph_k_coloring",
    "greedy_color",
    "hypergraph_chromatic_number",
    "hypergraph_k_coloring",
    "is_proper",
    "one_intersection_graph",
    "parse_coloring",
    "parse_hypergraph",
    "random_hypergraph",
    "read_coloring",
    "read_hypergraph",
    "subhypergraph",
    "two_color",
    "universal_vertex_family",
]
