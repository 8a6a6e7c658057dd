"""The icosahedral rotation group, rebuilt from three generators and matched with A5."""
from .group import GeneratorSet, Group, evaluate_word, generate, parse_word, shortest_word, verify_relations
from .icosa import IcosaGraph, RotationClass, build_graph, classify_rotation, neighbor_pentagon, shared_vertex_compose
from .iso import build_a5, extend_hom, full_correspondence, verify_isomorphism
from .perm import CycleParseError, CycleType, Domain, Permutation, compose, format_cycles, identity, parse_cycles
from .verify import verify_all, verify_table


__all__ = [
    "CycleParseError", "CycleType", "Domain", "GeneratorSet", "Group", "IcosaGraph", "Permutation",
    "RotationClass", "build_a5", "build_graph", "classify_rotation", "compose", "evaluate_word",
    "extend_hom", "format_cycles", "full_correspondence", "generate", "identity", "neighbor_pentagon",
    "parse_cycles", "parse_word", "shared_vertex_compose", "shortest_word", "verify_all",
    "verify_isomorphism", "verify_relations", "verify_table",
]
__version__ = "0.1.0"
