"""
Latin squares from 1-factorisations: U(F), folding, row/column/symbol cycles, conjugates and classification.
"""

from src.core.latin.latin_square import (
    LatinClassification,
    LatinSquare,
    RowCycle,
    classify,
    column_cycles,
    conjugate,
    format_square,
    hamiltonian_row_pairs,
    is_row_hamiltonian,
    parse_square,
    row_cycle_lengths,
    row_cycles,
    square_automorphism_check,
    symbol_cycles,
)
from src.core.latin.folding import FoldReport, fold, fold_report, species_count, unipotent_square

__all__ = [
    "LatinClassification", "LatinSquare", "RowCycle", "classify", "column_cycles", "conjugate",
    "format_square", "hamiltonian_row_pairs", "is_row_hamiltonian", "parse_square",
    "row_cycle_lengths", "row_cycles", "square_automorphism_check", "symbol_cycles",
    "FoldReport", "fold", "fold_report", "species_count", "unipotent_square",
]
