"""
Orderly enumeration of P1Fs: seeds, compatibility tables, the backtracking search and checkpoints.
"""

from src.core.search.seeds import SEED_EDGE, Seed, gen_seeds, has_smaller_prefix, is_seed_representative, owner_matrix
from src.core.search.compat_table import CompatTable, build_compat_table
from src.core.search.checkpoint import Checkpoint, CheckpointRecord
from src.core.search.orderly_search import (
    EnumerationSummary,
    MemorySink,
    ResultFileSink,
    SearchState,
    SeedResult,
    dedupe_result_file,
    enumerate_p1fs,
    search_seed,
    select_branch_edge,
)
from src.core.search.oracle import brute_force_classes, brute_force_seed_count

__all__ = [
    "SEED_EDGE", "Seed", "gen_seeds", "has_smaller_prefix", "is_seed_representative", "owner_matrix",
    "CompatTable", "build_compat_table", "Checkpoint", "CheckpointRecord",
    "EnumerationSummary", "MemorySink", "ResultFileSink", "SearchState", "SeedResult",
    "dedupe_result_file", "enumerate_p1fs", "search_seed", "select_branch_edge",
    "brute_force_classes", "brute_force_seed_count",
]
