"""
Isomorphism invariants of 1-factorisations: the train, indegree sequence, p-vector,
tricolour vector, vertex-cycle tallies and per-row cycle profiles.
"""

from src.core.invariants.train import (
    IndegreeSequence,
    PVector,
    Train,
    build_train,
    indegree_sequence,
    p_vector,
    path_lengths,
    train_canonical_hash,
)
from src.core.invariants.factor_invariants import (
    INVARIANT_KINDS,
    PV4_MAX_I,
    TRICOLOUR_K16_CLASSES,
    ClassCount,
    InvariantReport,
    check_tricolour_calibration,
    class_counts,
    invariant_report,
    per_row_cycle_profile,
    tricolour_vector,
    vertex_cycle_tally,
)

__all__ = [
    "IndegreeSequence", "PVector", "Train", "build_train", "indegree_sequence", "p_vector",
    "path_lengths", "train_canonical_hash",
    "INVARIANT_KINDS", "PV4_MAX_I", "TRICOLOUR_K16_CLASSES", "ClassCount", "InvariantReport",
    "check_tricolour_calibration", "class_counts", "invariant_report", "per_row_cycle_profile",
    "tricolour_vector", "vertex_cycle_tally",
]
