"""
测试公共夹具
"""

import random
from typing import List

import pytest

from src.core.catalogue.line_codec import emit_line, parse_line
from src.core.factorisation import Factorisation
from src.data import cyclic7_spec, k16_printed_lines, nonperfect_k8, square15 as load_square15

K4_LINE = "abcd acbd adbc"
K6_LINE = "abcdef acbedf adbfce aebdcf afbcde"


def random_perm(n: int, rng: random.Random) -> List[int]:
    perm = list(range(n))
    rng.shuffle(perm)
    return perm


def relabel_line(line: str, perm: List[int]) -> str:
    """按 perm 重标号后的目录行（不再是规范形）"""
    return emit_line(parse_line(line).relabel(perm))


@pytest.fixture
def rng():
    return random.Random(20240611)


@pytest.fixture
def k4() -> Factorisation:
    return parse_line(K4_LINE)


@pytest.fixture
def k6() -> Factorisation:
    return parse_line(K6_LINE)


@pytest.fixture(scope="session")
def printed_lines():
    """已发表的九个 K16 P1F：名称 -> 规范行"""
    return k16_printed_lines()


@pytest.fixture(scope="session")
def printed(printed_lines):
    return {name: parse_line(line) for name, line in printed_lines.items()}


@pytest.fixture(scope="session")
def rigid(printed):
    return printed["rigid_order2_collision"]


@pytest.fixture
def spec_cyclic7():
    return cyclic7_spec()


@pytest.fixture(name="square15")
def square15_fixture():
    return load_square15()


@pytest.fixture
def k8_nonperfect() -> Factorisation:
    return nonperfect_k8()
