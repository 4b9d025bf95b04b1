"""
发展构造测试
"""

import pytest

from src.core.catalogue import emit_line, parse_factor
from src.core.develop import DevelopmentSpec, develop, parse_permutation, parse_spec, parse_spec_file
from src.core.errors import DevelopmentError, DevelopmentSpecError, PermutationParseError
from src.core.factorisation import is_p1f
from src.data import CYCLIC7_SPEC
from tests.conftest import K6_LINE

PERTURBED_BASE = "{ab, cg, dp, em, fi, ho, jl, kn}"


def test_cyclic_development_is_p1f(spec_cyclic7):
    factorisation = develop(spec_cyclic7)
    assert len(factorisation) == 15
    assert is_p1f(factorisation)
    assert spec_cyclic7.generator.fixes(factorisation)
    assert spec_cyclic7.generator.order == 7


def test_parse_spec_file_infers_order():
    spec = parse_spec_file(CYCLIC7_SPEC)
    assert spec.n == 16
    assert len(spec.base_factors) == 2 and len(spec.fixed_factors) == 1
    assert spec.to_dict()["perm"] == "(abcdefg)(hijklmn)"


def test_identity_generator_returns_base(k6):
    text = "perm: ()\nbase: " + K6_LINE
    spec = parse_spec(text)
    assert spec.generator.is_identity
    assert develop(spec) == k6


def test_perturbed_base_reports_witness(spec_cyclic7):
    bases = (parse_factor(PERTURBED_BASE, 16),) + spec_cyclic7.base_factors[1:]
    spec = DevelopmentSpec(16, spec_cyclic7.generator, bases, spec_cyclic7.fixed_factors)
    with pytest.raises(DevelopmentError) as exc:
        develop(spec)
    witness = exc.value.witness
    assert witness is not None

    # 直接统计见证边被覆盖的次数
    factors = []
    for base in bases:
        image = base
        for _ in range(7):
            factors.append(image)
            image = image.relabel(spec.generator.perm)
    factors.extend(spec.fixed_factors)
    times = sum(1 for f in factors if f.contains(*witness))
    assert times != 1
    assert times == exc.value.multiplicity


def test_duplicate_images_raise(k4):
    factor = k4.factors[0]
    spec = DevelopmentSpec(4, parse_permutation("", 4), (factor, factor, k4.factors[1]))
    with pytest.raises(DevelopmentError) as exc:
        develop(spec)
    assert exc.value.witness is None
    assert exc.value.multiplicity == 2


def test_spec_preconditions(spec_cyclic7):
    with pytest.raises(DevelopmentSpecError):
        DevelopmentSpec(16, spec_cyclic7.generator, spec_cyclic7.base_factors)
    moved = parse_factor("{ab, cd, ef, gh, ij, kl, mn, op}", 16)
    with pytest.raises(DevelopmentSpecError):
        DevelopmentSpec(16, spec_cyclic7.generator, spec_cyclic7.base_factors, (moved,))
    with pytest.raises(DevelopmentSpecError):
        DevelopmentSpec(14, spec_cyclic7.generator, spec_cyclic7.base_factors, spec_cyclic7.fixed_factors)


@pytest.mark.parametrize("text", ["", "base: abcd", "oops\nperm: (ab)"])
def test_parse_spec_errors(text):
    with pytest.raises((DevelopmentSpecError, PermutationParseError)):
        parse_spec(text)


def test_parse_permutation_forms():
    assert parse_permutation("(abc)(de)", 6).perm == (1, 2, 0, 4, 3, 5)
    assert parse_permutation("(0,1,2)(5,6)", 8).perm == (1, 2, 0, 3, 4, 6, 5, 7)
    assert parse_permutation("()", 4).is_identity
    assert parse_permutation("  ", 4).is_identity


@pytest.mark.parametrize("text", ["(aa)", "(abz)", "abc", "(ab)(bc)", "(0,9)", "(a,b)"])
def test_parse_permutation_errors(text):
    with pytest.raises(PermutationParseError):
        parse_permutation(text, 6)


def test_developed_line_is_stable(spec_cyclic7):
    line = emit_line(develop(spec_cyclic7))
    assert line.split()[0].startswith("ab")
    assert len(line.split()) == 15
