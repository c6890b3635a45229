"""Spectral analysis of the atom-bond connectivity (ABC) matrix of simple
connected graphs: invariants, closed-form bounds, isomorphism-free
enumeration of small graph classes, and exhaustive verification
experiments over them.
"""

from .bounds import (BoundReport, bound_report, cyclomatic_upper_bound,
                     degree_upper_bound, degree_upper_bound_int, dip,
                     int_bound_profile, named_thresholds)
from .eigen import (ConvergenceError, SpectralResult, full_spectrum,
                    spectral_radius)
from .enumeration import (GraphClassSpec, connected_graphs, graph_class,
                          read_graph_class, trees)
from .graph6 import (Graph6Error, encode_graph6, iter_graph6, parse_graph6,
                     read_graph6_file, write_graph6_file)
from .graphs import (Graph, automorphism_orbits, canonical_key, complete,
                     cycle, delta_n_minus_3_trees, double_star, family,
                     make_graph, path, star, star_plus_edge)
from .invariants import (AbcWeights, abc_index, abc_matrix, abc_spectral,
                         abc_spectral_radius, edge_weight, estrada_bounds,
                         r_minus_one)

__version__ = "0.1.0"

__all__ = [
    "AbcWeights", "BoundReport", "ConvergenceError", "Graph", "GraphClassSpec",
    "Graph6Error", "SpectralResult",
    "abc_index", "abc_matrix", "abc_spectral", "abc_spectral_radius",
    "automorphism_orbits", "bound_report", "canonical_key", "complete",
    "connected_graphs", "cycle", "cyclomatic_upper_bound",
    "degree_upper_bound", "degree_upper_bound_int", "delta_n_minus_3_trees",
    "dip", "double_star", "edge_weight", "encode_graph6", "estrada_bounds",
    "family", "full_spectrum", "graph_class", "int_bound_profile",
    "iter_graph6", "make_graph", "named_thresholds", "parse_graph6", "path",
    "r_minus_one", "read_graph_class", "read_graph6_file", "spectral_radius",
    "star", "star_plus_edge", "trees", "write_graph6_file",
]
