"""Symmetry breaking in graphs: exact distinguishing numbers and indices,
automorphism groups, constructive labelings and family surveys."""

from .constructive import CertifiedLabeling
from .distinguish import (
    DistinguishingResult,
    distinguishing_index,
    distinguishing_number,
    is_distinguishing,
    verify_bound,
)
from .errors import SymbreakError
from .families import (
    complete,
    complete_bipartite,
    cycle,
    enumerate_halin,
    enumerate_mops,
    mycielski_sequence,
    mycielskian,
    path,
    star,
    wheel,
)
from .graph import Edge, EdgeLabeling, Graph, VertexLabeling, build_graph
from .graph6 import from_graph6, to_graph6
from .group import AutGroup, automorphisms, canonical_form

__version__ = "0.1.0"

__all__ = [
    "AutGroup", "CertifiedLabeling", "DistinguishingResult", "Edge", "EdgeLabeling", "Graph",
    "SymbreakError", "VertexLabeling", "automorphisms", "build_graph", "canonical_form",
    "complete", "complete_bipartite", "cycle", "distinguishing_index", "distinguishing_number",
    "enumerate_halin", "enumerate_mops", "from_graph6", "is_distinguishing", "mycielski_sequence",
    "mycielskian", "path", "star", "to_graph6", "verify_bound", "wheel",
]
