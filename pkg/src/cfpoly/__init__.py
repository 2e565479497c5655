"""Conflict-free colorings of cyclic-polytope facet hypergraphs and related families."""

from .colorers import (
    UniversalCycle,
    WaleckiDecomposition,
    cf_color_d2r,
    cf_color_fc,
    cf_color_i2,
    cf_color_odd,
    color_from_eulerian,
    proper_color,
    universal_cycle,
    walecki_paths,
)
from .hypergraphs import (
    HypergraphFamily,
    cycle,
    disjoint_paths,
    enum_hyperedges,
    fc,
    gale_is_facet,
    hyperedge_count,
    matching,
    two_intervals,
)
from .verify import (
    Coloring,
    SearchBudget,
    cf_chromatic_exact,
    chi_exact,
    find_cf_violation,
    is_conflict_free,
    is_proper,
)

__all__ = [
    "Coloring",
    "HypergraphFamily",
    "SearchBudget",
    "UniversalCycle",
    "WaleckiDecomposition",
    "cf_chromatic_exact",
    "cf_color_d2r",
    "cf_color_fc",
    "cf_color_i2",
    "cf_color_odd",
    "chi_exact",
    "color_from_eulerian",
    "cycle",
    "disjoint_paths",
    "enum_hyperedges",
    "fc",
    "find_cf_violation",
    "gale_is_facet",
    "hyperedge_count",
    "is_conflict_free",
    "is_proper",
    "matching",
    "proper_color",
    "two_intervals",
    "universal_cycle",
    "walecki_paths",
]
