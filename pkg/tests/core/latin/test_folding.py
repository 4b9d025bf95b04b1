"""
U(F)、折叠与种类数测试
"""

import pytest

from src.core.develop import develop
from src.core.errors import FactorError
from src.core.latin import classify, fold, fold_report, species_count, unipotent_square
from src.data import k16_printed_lines

K4_UNIPOTENT = ((4, 1, 2, 3), (1, 4, 3, 2), (2, 3, 4, 1), (3, 2, 1, 4))


def test_unipotent_square_k4(k4):
    square = unipotent_square(k4)
    assert square.cells == K4_UNIPOTENT
    assert square.is_symmetric()
    assert square.is_unipotent()


def test_fold_k4(k4):
    folded = fold(k4, 3)
    assert folded.cells == ((1, 3, 2), (3, 2, 1), (2, 1, 3))
    assert folded.is_symmetric()
    assert folded.is_idempotent()
    with pytest.raises(FactorError):
        fold(k4, 4)


def test_folds_are_symmetric_idempotent(k6):
    for j in range(6):
        folded = fold(k6, j)
        assert folded.order == 5
        assert folded.is_symmetric() and folded.is_idempotent()


PRINTED_NAMES = sorted(k16_printed_lines())


@pytest.mark.parametrize("name", PRINTED_NAMES)
def test_printed_fixture_folds(printed, name):
    factorisation = printed[name]
    for j in range(factorisation.n):
        folded = fold(factorisation, j)
        assert folded.order == 15
        assert folded.is_symmetric() and folded.is_idempotent(), j
    report = fold_report(factorisation)
    assert all(c.symbol_hamiltonian for _, c in report.folds)
    assert report.symbol_hamiltonian == 16
    assert report.atomic == 0
    assert report.summary() == "symbol-Hamiltonian: 16/16, atomic: 0"


def test_non_perfect_has_non_symbol_hamiltonian_fold(k8_nonperfect):
    report = fold_report(k8_nonperfect)
    assert report.symbol_hamiltonian < 8
    assert len(report.to_dict()["folds"]) == 8


def test_fold_report_selected_vertices(k6):
    report = fold_report(k6, [0, 2])
    assert [j for j, _ in report.folds] == [0, 2]
    assert report.to_dict()["folds"][1]["vertex"] == "c"
    assert report.folds[0][1] == classify(fold(k6, 0))


def test_species_counts(k4, rigid, spec_cyclic7):
    assert species_count(k4) == 1
    assert species_count(rigid) == 16
    assert species_count(develop(spec_cyclic7)) == 4
