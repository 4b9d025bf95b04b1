"""
三色向量、顶点圈计数、逐行剖面与不变量报告测试
"""

from itertools import combinations
from math import comb

import pytest

from src.core.errors import CalibrationError
from src.core.invariants import (
    INVARIANT_KINDS,
    InvariantReport,
    check_tricolour_calibration,
    class_counts,
    invariant_report,
    per_row_cycle_profile,
    tricolour_vector,
    vertex_cycle_tally,
)
from tests.conftest import random_perm


def _tricolour_by_factors(factorisation):
    """逐个因子三元组直接数三角形"""
    n = factorisation.n
    counts = []
    for trio in combinations(factorisation.factors, 3):
        total = 0
        for x, y, z in combinations(range(n), 3):
            edges = [(x, y), (y, z), (x, z)]
            hits = [sum(1 for u, v in edges if f.contains(u, v)) for f in trio]
            if hits == [1, 1, 1]:
                total += 1
        counts.append(total)
    return tuple(sorted(counts))


def test_tricolour_k4(k4):
    assert tricolour_vector(k4) == (4,)


@pytest.mark.parametrize("fixture", ["k6", "k8_nonperfect"])
def test_tricolour_matches_direct_count(request, fixture):
    factorisation = request.getfixturevalue(fixture)
    vector = tricolour_vector(factorisation)
    n = factorisation.n
    assert len(vector) == comb(n - 1, 3)
    assert sum(vector) == comb(n, 3)
    assert vector == _tricolour_by_factors(factorisation)


def test_tricolour_relabel_invariant(rng, rigid):
    assert tricolour_vector(rigid.relabel(random_perm(16, rng))) == tricolour_vector(rigid)


def test_calibration_gate():
    check_tricolour_calibration(2320, 3155)
    check_tricolour_calibration(7, 20)
    with pytest.raises(CalibrationError):
        check_tricolour_calibration(2319, 3155)


def test_cycle_tally_totals(printed):
    for factorisation in printed.values():
        tally = vertex_cycle_tally(factorisation)
        n = factorisation.n
        assert sum(length * count for length, count in tally.items()) == comb(n, 2) * (n - 2)
        assert list(tally) == sorted(tally)


def test_cycle_tally_k4(k4):
    # 每个行对在另外两列上构成一个 2-圈
    assert vertex_cycle_tally(k4) == {2: 6}


def test_profile_counts_rows_of_each_cycle(rigid):
    tally = vertex_cycle_tally(rigid)
    profile = per_row_cycle_profile(rigid, (3, 4))
    assert len(profile) == 16
    assert profile == sorted(profile)
    assert sum(row[0] for row in profile) == 2 * tally.get(3, 0)
    assert sum(row[1] for row in profile) == 2 * tally.get(4, 0)
    assert per_row_cycle_profile(rigid, (4, 3)) == profile


def test_profile_relabel_invariant(rng, rigid):
    relabelled = rigid.relabel(random_perm(16, rng))
    assert per_row_cycle_profile(relabelled) == per_row_cycle_profile(rigid)
    assert vertex_cycle_tally(relabelled) == vertex_cycle_tally(rigid)


def test_report_round_trip(printed_lines, printed):
    line = printed_lines["p_vector_pair_a"]
    report = invariant_report(printed["p_vector_pair_a"], line)
    assert report.p_vector == (139, 19, 15, 14, 17, 17)
    assert InvariantReport.parse_line(report.format_line()) == report
    assert report.format_line().startswith(line + "\t")
    assert report.to_dict()["p_vector"] == [139, 19, 15, 14, 17, 17]
    for kind in INVARIANT_KINDS:
        report.value(kind)
    with pytest.raises(ValueError):
        report.value("colour")


def test_class_counts_on_printed_fixtures(printed_lines, printed):
    reports = [invariant_report(printed[name], printed_lines[name]) for name in printed]
    triples = [r for name, r in zip(printed, reports) if name.startswith("indegree_triple")]
    indegree = class_counts(triples, "indegree")
    assert indegree.classes == 2
    assert indegree.collisions == {3: 2}

    pair = [r for r in reports if r.line in (printed_lines["p_vector_pair_a"], printed_lines["p_vector_pair_b"])]
    assert class_counts(pair, "pv").classes == 2
    assert class_counts(pair, "pv4").classes == 1
    assert class_counts(pair, "pv4").to_dict()["collisions"] == {"2": 1}
    assert class_counts(pair, "train").classes == 2



def test_pv4_class_is_exact_p_vector(printed_lines, printed):
    from src.core.invariants import PV4_MAX_I, build_train, p_vector

    factorisation = printed["p_vector_pair_b"]
    report = invariant_report(factorisation, printed_lines["p_vector_pair_b"], max_i=7)
    assert report.value("pv4") == p_vector(build_train(factorisation), PV4_MAX_I).counts
    assert report.value("pv4") == (139, 19, 15, 14, 17)


def test_report_rejects_short_p_vector(k6):
    with pytest.raises(ValueError):
        invariant_report(k6, "abcdef acbedf adbfce aebdcf afbcde", max_i=3)
