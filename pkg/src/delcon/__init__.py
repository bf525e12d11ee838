"""Deletion-contraction polynomial invariants of multigraphs."""

from .engine import MemoTable, ReductionScheme, is_well_defined, reduce
from .invariants import (
    InvariantKind, J_poly, cycle_poly, hamiltonian_count, hamiltonian_poly, matching_poly,
    merged_poly, specialize, tutte_check,
)
from .multigraph import Multigraph
from .poly import Poly

__all__ = [
    "InvariantKind", "J_poly", "MemoTable", "Multigraph", "Poly", "ReductionScheme",
    "cycle_poly", "hamiltonian_count", "hamiltonian_poly", "is_well_defined", "matching_poly",
    "merged_poly", "reduce", "specialize", "tutte_check",
]
