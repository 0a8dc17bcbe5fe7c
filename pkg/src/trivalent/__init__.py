"""State counting for trivalent sphere maps under whole-face vertex flips.

Selecting a face flips the state bit of every vertex on its boundary; two
states are equivalent when some face selection carries one to the other.
The package computes the class count 2^(n - rank) by GF(2) elimination on
the face-vertex incidence matrix, independently predicts the rank from face
parities and coloring monodromy, and covers the classical instances of the
same calculus: signed-graph switching and link-shadow crossing flips.
"""

from .classical import (
    AbstractGraph,
    BalanceReport,
    LinkProjection,
    Signature,
    is_balanced,
    link_class_count,
    link_region_matrix,
    shimizu_solve,
    switching_class_count,
    switching_matrix,
)
from .coloring import (
    Classification,
    MonodromyReport,
    S3Element,
    ThetaGraphError,
    Z2Coloring,
    Z3Coloring,
    classify,
    monodromy,
    rank_prediction,
    transport,
    z2_coloring_space,
    z3_coloring,
    z3_to_z2,
)
from .generator import BUILTIN_NAMES, GenConfig, builtin, face_edge_insertion, random_trivalent
from .gf2 import (
    BitMatrix,
    BitVector,
    left_nullspace_basis,
    rank,
    solve_left,
    span_size_bruteforce,
)
from .planar_map import (
    Face,
    FaceParities,
    MapFormatError,
    MapStructureError,
    NotTrivalentError,
    PlanarMap,
    TrivalentReport,
    format_pmap,
    parse_pmap,
)
from .region_calculus import (
    ClassCount,
    RegionSelection,
    State,
    apply_regions,
    are_equivalent,
    class_representative,
    count_states,
    region_system,
)
from .two_odd import (
    StripConfig,
    TriangulatedDisk,
    boundary_attachment_count,
    build_strip_config,
    transport_compatibility,
    verify_two_odd_law,
)

__version__ = "0.1.0"

__all__ = [
    "AbstractGraph",
    "BalanceReport",
    "BitMatrix",
    "BitVector",
    "BUILTIN_NAMES",
    "Classification",
    "ClassCount",
    "Face",
    "FaceParities",
    "GenConfig",
    "LinkProjection",
    "MapFormatError",
    "MapStructureError",
    "MonodromyReport",
    "NotTrivalentError",
    "PlanarMap",
    "RegionSelection",
    "S3Element",
    "Signature",
    "State",
    "StripConfig",
    "ThetaGraphError",
    "TriangulatedDisk",
    "TrivalentReport",
    "Z2Coloring",
    "Z3Coloring",
    "apply_regions",
    "are_equivalent",
    "boundary_attachment_count",
    "build_strip_config",
    "builtin",
    "class_representative",
    "classify",
    "count_states",
    "face_edge_insertion",
    "format_pmap",
    "is_balanced",
    "left_nullspace_basis",
    "link_class_count",
    "link_region_matrix",
    "monodromy",
    "parse_pmap",
    "random_trivalent",
    "rank",
    "rank_prediction",
    "region_system",
    "shimizu_solve",
    "solve_left",
    "span_size_bruteforce",
    "switching_class_count",
    "switching_matrix",
    "transport",
    "transport_compatibility",
    "verify_two_odd_law",
    "z2_coloring_space",
    "z3_coloring",
    "z3_to_z2",
]
