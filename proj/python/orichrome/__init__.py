"""Oriented colouring: exact oracles, full targets, surface colouring and genus bounds."""

from ._core import (
    Error,
    OrientedGraph,
    bounds_csv_row,
    chi_lower_bound,
    chi_upper_bound,
    colour_surface_graph,
    degeneracy,
    extremal_clique_order,
    full_class_size,
    generate,
    generator_kinds,
    genus_upper_from_edges,
    is_oriented_clique,
    lambert_w0,
    min_edge_oriented_clique,
    minimal_full_n,
    oriented_chromatic,
    sample_full,
    two_dipath_chromatic,
    verify_full,
)

__all__ = [
    "Error",
    "OrientedGraph",
    "bounds_csv_row",
    "chi_lower_bound",
    "chi_upper_bound",
    "colour_surface_graph",
    "degeneracy",
    "extremal_clique_order",
    "full_class_size",
    "generate",
    "generator_kinds",
    "genus_upper_from_edges",
    "is_oriented_clique",
    "lambert_w0",
    "min_edge_oriented_clique",
    "minimal_full_n",
    "oriented_chromatic",
    "sample_full",
    "two_dipath_chromatic",
    "verify_full",
]
