"""Degree-diameter graph toolkit.

Thin python surface over the C++ core: family generators, Moore-bound
arithmetic, adjacency spectra, non-backtracking walk certificates and exact
combinatorial expansion on small graphs.
"""

import json as _json

from moorex._core import (
    Graph,
    GraphError,
    analyze_json,
    degree_profile,
    diameter,
    directed_moore_bound,
    eccentricities,
    exact_expansion,
    gen_complete,
    gen_complete_bipartite,
    gen_cycle,
    gen_debruijn_digraph,
    gen_debruijn_undirected,
    gen_kautz,
    gen_petersen,
    gen_polarity,
    gen_two_cliques_bridged,
    geronimus_coeffs,
    geronimus_value,
    moore_bound,
    moore_profile,
    parse_edge_list,
    spectral_bound_k2,
    spectrum,
    to_edge_list,
)

__all__ = [
    "Graph",
    "GraphError",
    "analyze",
    "analyze_json",
    "degree_profile",
    "diameter",
    "directed_moore_bound",
    "eccentricities",
    "exact_expansion",
    "gen_complete",
    "gen_complete_bipartite",
    "gen_cycle",
    "gen_debruijn_digraph",
    "gen_debruijn_undirected",
    "gen_kautz",
    "gen_petersen",
    "gen_polarity",
    "gen_two_cliques_bridged",
    "geronimus_coeffs",
    "geronimus_value",
    "moore_bound",
    "moore_profile",
    "parse_edge_list",
    "spectral_bound_k2",
    "spectrum",
    "to_edge_list",
]

__version__ = "0.1.0"


def analyze(graph, exact_cap=24):
    """Full analysis report as a nested dict (see ``analyze_json``)."""
    return _json.loads(analyze_json(graph, exact_cap))
