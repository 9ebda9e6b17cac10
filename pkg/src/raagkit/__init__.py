"""Exact invariants of right-angled Artin groups computed from their graphs."""

from raagkit.errors import GraphError, GuardExceeded, InvariantViolation, RaagError
from raagkit.graph import (
    Graph,
    cliques,
    complement,
    components,
    disjoint_union,
    family,
    induced_subgraph,
    is_near_bridge,
    join,
)
from raagkit.invariants import (
    chen_ranks,
    clique_polynomial,
    clique_polynomial_recursive,
    connectivity,
    cut_numbers,
    cut_polynomial,
    lcs_ranks,
)
from raagkit.polyseries import IntPoly, RankTable, RatSeries
from raagkit.resonance import (
    Character,
    lattice_fingerprint,
    resonance_components,
    sigma1_contains,
)

__version__ = "0.1.0"

__all__ = [
    "Character",
    "Graph",
    "GraphError",
    "GuardExceeded",
    "IntPoly",
    "InvariantViolation",
    "RaagError",
    "RankTable",
    "RatSeries",
    "chen_ranks",
    "clique_polynomial",
    "clique_polynomial_recursive",
    "cliques",
    "complement",
    "components",
    "connectivity",
    "cut_numbers",
    "cut_polynomial",
    "disjoint_union",
    "family",
    "induced_subgraph",
    "is_near_bridge",
    "join",
    "lattice_fingerprint",
    "lcs_ranks",
    "resonance_components",
    "sigma1_contains",
]
