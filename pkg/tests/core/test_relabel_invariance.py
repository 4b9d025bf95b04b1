"""
重标号不变性：规范行与全部不变量在随机重标号下保持不变
"""

import random
from functools import lru_cache

import pytest

from src.core.canon import canonical_line
from src.core.invariants import INVARIANT_KINDS, invariant_report
from src.data import k16_printed, k16_printed_lines
from tests.conftest import random_perm

NAMES = sorted(k16_printed_lines())
QUICK_SEEDS = range(2)
FULL_SEEDS = range(2, 14)


@lru_cache(maxsize=None)
def _baseline(name: str):
    return invariant_report(k16_printed()[name], k16_printed_lines()[name])


def _check(name: str, seed: int) -> None:
    line = k16_printed_lines()[name]
    relabelled = k16_printed()[name].relabel(random_perm(16, random.Random(seed)))
    assert canonical_line(relabelled) == line
    report = invariant_report(relabelled, line)
    baseline = _baseline(name)
    for kind in INVARIANT_KINDS:
        assert report.value(kind) == baseline.value(kind), kind


@pytest.mark.parametrize("seed", QUICK_SEEDS)
@pytest.mark.parametrize("name", NAMES)
def test_relabel_invariance(name, seed):
    _check(name, seed)


@pytest.mark.slow
@pytest.mark.parametrize("seed", FULL_SEEDS)
@pytest.mark.parametrize("name", NAMES)
def test_relabel_invariance_full(name, seed):
    _check(name, seed)
