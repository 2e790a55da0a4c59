"""Topological classification of functions with isolated critical points on
closed surfaces, via distinguishing graphs."""

from .classify import (
    IsoWitness, Relation, are_related, canonical_form, canonical_key, find_isomorphism,
    mirror, negate, oracle_isomorphic, verify_witness,
)
from .errors import (
    DGError, InvalidGraphError, ParseError, PreconditionError, ShapeError, SizeGuardError,
    UnknownVertexError, WordError,
)
from .graph import Cycle, Dart, DistinguishingGraph, Edge, LevelGraph, Pairing, Role, Violation, validate
from .textio import DocumentModel, parse_text, serialize_text
from .topology import (
    EdgeEnd, Orientation, SurfaceReport, VertexKind, VertexReport, classify_vertex,
    euler_characteristic, is_connected, is_orientable, is_realizable, locally_equivalent,
    orientation_assignment, smooth, subdivide_loops, surface_report, vertex_link, vertex_report,
)
from .words import (
    Enumeration, SignedWord, SurfaceSpec, WordClass, enumerate_minimal, graph_to_word,
    word_classes, word_has_successive_fragment, word_mirror, word_negate, word_planar,
    word_rename, word_to_graph,
)

__version__ = "0.1.0"

__all__ = [
    "Cycle",
    "DGError",
    "Dart",
    "DistinguishingGraph",
    "DocumentModel",
    "Edge",
    "EdgeEnd",
    "Enumeration",
    "InvalidGraphError",
    "IsoWitness",
    "LevelGraph",
    "Orientation",
    "Pairing",
    "ParseError",
    "PreconditionError",
    "Relation",
    "Role",
    "ShapeError",
    "SignedWord",
    "SizeGuardError",
    "SurfaceReport",
    "SurfaceSpec",
    "UnknownVertexError",
    "VertexKind",
    "VertexReport",
    "Violation",
    "WordClass",
    "WordError",
    "are_related",
    "canonical_form",
    "canonical_key",
    "classify_vertex",
    "enumerate_minimal",
    "euler_characteristic",
    "find_isomorphism",
    "graph_to_word",
    "is_connected",
    "is_orientable",
    "is_realizable",
    "locally_equivalent",
    "mirror",
    "negate",
    "oracle_isomorphic",
    "orientation_assignment",
    "parse_text",
    "serialize_text",
    "smooth",
    "subdivide_loops",
    "surface_report",
    "validate",
    "verify_witness",
    "vertex_link",
    "vertex_report",
    "word_classes",
    "word_has_successive_fragment",
    "word_mirror",
    "word_negate",
    "word_planar",
    "word_rename",
    "word_to_graph",
]
