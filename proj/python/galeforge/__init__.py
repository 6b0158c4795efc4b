"""Neighborly 2d-polytopes with 2d+4 vertices via plane Gale diagrams.

Thin wrapper over the pybind11 extension; trees travel as the rooted
parenthesis text format, diagrams and face lattices as JSON strings.
"""

from ._galeforge import (
    build_correspondence,
    build_diagram,
    catalan,
    count_t_diagrams,
    cyclic_diagram,
    diagram_svg,
    enumerate_trees,
    extract_tree,
    face_lattice,
    fvector,
    identify_tree,
    is_T_diagram,
    is_polytope_diagram,
    is_t_diagram,
    minimal_nonfaces,
    remarkable_edges,
    verify_oracle,
)

__all__ = [
    "build_correspondence",
    "build_diagram",
    "catalan",
    "count_t_diagrams",
    "cyclic_diagram",
    "diagram_svg",
    "enumerate_trees",
    "extract_tree",
    "face_lattice",
    "fvector",
    "identify_tree",
    "is_T_diagram",
    "is_polytope_diagram",
    "is_t_diagram",
    "minimal_nonfaces",
    "remarkable_edges",
    "verify_oracle",
]
