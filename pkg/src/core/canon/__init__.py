"""
Canonical labelling, isomorphism testing and automorphism groups of P1Fs.
"""

from src.core.canon.relabelling import CycleType, Relabelling, format_cycle_type, relabel
from src.core.canon.canonical_labeller import (
    AutGroup,
    CanonicalLabeller,
    CanonicalResult,
    are_isomorphic,
    automorphism_group,
    build_aut_group,
    canonical_form,
    canonical_line,
    canonicalize,
    cycle_alignments,
    relabelled_key,
)

__all__ = [
    "CycleType", "Relabelling", "format_cycle_type", "relabel",
    "AutGroup", "CanonicalLabeller", "CanonicalResult", "are_isomorphic", "automorphism_group",
    "build_aut_group", "canonical_form", "canonical_line", "canonicalize", "cycle_alignments", "relabelled_key",
]
