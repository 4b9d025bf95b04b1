"""
Vertex/edge/factor/factorisation types, unions of factors and P1F validation.
"""

from src.core.factorisation.edges import Edge, EdgeIndex, check_order, edge_count, edge_index, vertex_name
from src.core.factorisation.one_factor import (
    CycleStructure,
    Factorisation,
    OneFactor,
    ValidationReport,
    factor_union_cycles,
    is_compatible,
    is_p1f,
    make_F1_F2,
    validate_p1f,
)
from src.core.factorisation.matchings import compatible_matchings, count_perfect_matchings, iter_perfect_matchings

__all__ = [
    "Edge", "EdgeIndex", "check_order", "edge_count", "edge_index", "vertex_name",
    "CycleStructure", "Factorisation", "OneFactor", "ValidationReport",
    "factor_union_cycles", "is_compatible", "is_p1f", "make_F1_F2", "validate_p1f",
    "compatible_matchings", "count_perfect_matchings", "iter_perfect_matchings",
]
