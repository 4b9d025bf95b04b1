"""
种子生成与相容性表测试
"""

import numpy as np
import pytest

from src.core.factorisation import is_compatible, make_F1_F2
from src.core.search import (
    SEED_EDGE,
    build_compat_table,
    brute_force_seed_count,
    gen_seeds,
    is_seed_representative,
)


def test_k4_has_single_seed():
    seeds = gen_seeds(4)
    assert len(seeds) == 1
    assert seeds[0].F3.edge_pairs() == [(0, 2), (1, 3)]


@pytest.mark.parametrize("n", [4, 6])
def test_seed_count_matches_permutation_oracle(n):
    assert len(gen_seeds(n)) == brute_force_seed_count(n)


@pytest.mark.slow
def test_seed_count_matches_permutation_oracle_k8():
    assert len(gen_seeds(8)) == brute_force_seed_count(8)


def test_seeds_are_ordered_representatives():
    seeds = gen_seeds(8)
    f1, f2 = make_F1_F2(8)
    keys = [s.F3.sort_key for s in seeds]
    assert keys == sorted(keys)
    assert [s.index for s in seeds] == list(range(len(seeds)))
    for seed in seeds:
        assert seed.F3.contains(*SEED_EDGE)
        assert is_compatible(seed.F3, f1) and is_compatible(seed.F3, f2)
        assert is_seed_representative(seed.F3)


def test_oracle_rejects_large_orders():
    with pytest.raises(ValueError):
        brute_force_seed_count(10)


@pytest.mark.parametrize("n", [8, 10])
def test_compat_table_matches_pairwise_check(n):
    seed = gen_seeds(n)[0]
    table = build_compat_table(seed)
    assert len(table) > 0
    for f in table.factors:
        for g in seed.initial_factors():
            assert is_compatible(f, g)
    sample = table.factors[: min(len(table), 12)]
    for i, f in enumerate(sample):
        row = table.pair_row(i)
        for j, g in enumerate(sample):
            expected = i != j and is_compatible(f, g)
            assert bool(row[j]) == expected


def test_pair_bits_symmetric_with_empty_diagonal():
    table = build_compat_table(gen_seeds(8)[0])
    bits = table.pair_bits
    assert bits.shape == (len(table), len(table))
    assert np.array_equal(bits, bits.T)
    assert not bits.diagonal().any()


def test_edge_counts_follow_active_mask():
    table = build_compat_table(gen_seeds(8)[0])
    active = np.ones(len(table), dtype=bool)
    assert np.array_equal(table.edge_counts(active), table.per_edge_counts)
    active[:] = False
    assert not table.edge_counts(active).any()


K16_SEED_COUNT = 1647
K16_TABLE_BOUNDS = (56816, 59312)


@pytest.mark.slow
def test_k16_seed_count():
    assert len(gen_seeds(16)) == K16_SEED_COUNT


@pytest.mark.slow
def test_k16_compat_table_sizes():
    seeds = gen_seeds(16)
    low, high = K16_TABLE_BOUNDS
    for index in (0, 1, len(seeds) // 2, len(seeds) - 1):
        size = len(build_compat_table(seeds[index]))
        assert low <= size <= high, (index, size)
