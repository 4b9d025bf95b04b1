"""
随包数据测试
"""

from itertools import combinations

from src.core.factorisation import is_p1f
from src.data import large_orders


def test_printed_fixtures_are_distinct_p1fs(printed_lines, printed):
    assert len(printed) == 9
    for factorisation in printed.values():
        assert factorisation.n == 16
        assert is_p1f(factorisation)
    for a, b in combinations(printed_lines.values(), 2):
        assert a != b


def test_large_orders():
    rows = large_orders()
    assert len(rows) == 24
    for row in rows:
        assert row.p ** row.exponent == row.q
        assert row.order == row.q + 1
        assert row.order % 2 == 0


def test_square15_fixture(square15):
    assert square15.order == 15
    assert square15.is_idempotent()
