"""Exact (paired-)domination on chord intersection models."""

from .geom_model import (
    ChordModel,
    InvalidModelError,
    ParseError,
    UndirectedGraph,
    build_adjacency,
    chords_intersect,
    pair_restrictions,
    parse_model,
    random_polygon_model,
    serialize_model,
)
from .matching import InfeasibleError, has_perfect_matching, max_matching, min_augmentation
from .oracles import (
    Digraph,
    hamiltonian_path,
    is_dominating_set,
    is_paired_dominating_set,
    min_dominating_set_bruteforce,
    min_paired_dominating_set_bruteforce,
)
from .polygon_solver import solve_min_ds_polygon, solve_min_pds_polygon
from .reduction import build_reduction, ham_path_from_pds, pds_from_ham_path, validate_reduction

__all__ = [
    "ChordModel", "Digraph", "InfeasibleError", "InvalidModelError", "ParseError", "UndirectedGraph",
    "build_adjacency", "build_reduction", "chords_intersect", "ham_path_from_pds", "hamiltonian_path",
    "has_perfect_matching", "is_dominating_set", "is_paired_dominating_set", "max_matching",
    "min_augmentation", "min_dominating_set_bruteforce", "min_paired_dominating_set_bruteforce",
    "pair_restrictions", "parse_model", "pds_from_ham_path", "random_polygon_model", "serialize_model",
    "solve_min_ds_polygon", "solve_min_pds_polygon", "validate_reduction",
]
