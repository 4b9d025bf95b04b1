"""
随包发布的数据：已发表的 K16 P1F、C7 发展规格、15 阶非原子拉丁方、非完美的 K8 1-因子分解、大阶 P1F 参数
"""

from dataclasses import dataclass
from pathlib import Path
from typing import Dict, List, Tuple

from src.core.catalogue.line_codec import parse_line
from src.core.develop import DevelopmentSpec, parse_spec_file
from src.core.factorisation import Factorisation
from src.core.latin import LatinSquare, parse_square

DATA_DIR = Path(__file__).resolve().parent

K16_PRINTED = DATA_DIR / "k16_printed.tsv"
CYCLIC7_SPEC = DATA_DIR / "cyclic7_development.txt"
SQUARE15 = DATA_DIR / "square15.txt"
NONPERFECT_K8 = DATA_DIR / "nonperfect_k8.txt"
LARGE_ORDERS = DATA_DIR / "large_orders.tsv"


def _data_lines(path: Path) -> List[str]:
    with open(path, "r", encoding="utf-8") as f:
        return [line.rstrip("\n") for line in f if line.strip() and not line.startswith("#")]


def k16_printed_lines() -> Dict[str, str]:
    """名称 -> 目录行"""
    return dict(line.split("\t", 1) for line in _data_lines(K16_PRINTED))


def k16_printed() -> Dict[str, Factorisation]:
    return {name: parse_line(line) for name, line in k16_printed_lines().items()}


def cyclic7_spec() -> DevelopmentSpec:
    return parse_spec_file(CYCLIC7_SPEC)


def square15() -> LatinSquare:
    with open(SQUARE15, "r", encoding="utf-8") as f:
        return parse_square(f.read())


def nonperfect_k8() -> Factorisation:
    return parse_line(_data_lines(NONPERFECT_K8)[0])


@dataclass(frozen=True)
class LargeOrderParameters:
    """
    商陪集 starter 参数，对应 K_{q+1} 的 P1F（只作记录）

    Attributes:
        p: 素数
        q: p 的幂
        zeta: 定义多项式
        c_tilde: 系数列表
    """
    p: int
    q: int
    zeta: str
    c_tilde: Tuple[int, ...]

    @property
    def order(self) -> int:
        return self.q + 1

    @property
    def exponent(self) -> int:
        k, value = 0, 1
        while value < self.q:
            value *= self.p
            k += 1
        return k


def large_orders() -> List[LargeOrderParameters]:
    rows = []
    for line in _data_lines(LARGE_ORDERS):
        p, q, zeta, c = line.split("\t")
        rows.append(LargeOrderParameters(int(p), int(q), zeta, tuple(int(x) for x in c.split(","))))
    return rows
