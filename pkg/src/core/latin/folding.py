"""
1-因子分解与拉丁方之间的转换

U(F)[i, j] = k 表示边 ij 在（按 token 升序的）第 k 个因子中，对角线取 n。
I(F, j) 把第 j 列折叠到主对角线后删去第 j 行和第 j 列，再重命名符号使其幂等。
"""

from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

import numpy as np

from src.core.canon import AutGroup, automorphism_group
from src.core.errors import FactorError
from src.core.factorisation import Factorisation, vertex_name
from src.core.latin.latin_square import LatinClassification, LatinSquare, classify


def unipotent_square(factorisation: Factorisation) -> LatinSquare:
    """
    1-因子分解对应的对称单幂拉丁方 U(F)

    Args:
        factorisation: 1-因子分解（不要求完美）

    Returns:
        LatinSquare: n 阶拉丁方
    """
    n = factorisation.n
    cells = np.asarray(factorisation.owner, dtype=np.int32) + 1
    off_diagonal = ~np.eye(n, dtype=bool)
    if (cells[off_diagonal] == 0).any():
        raise FactorError("因子没有覆盖全部边，不是1-因子分解")
    np.fill_diagonal(cells, n)
    return LatinSquare.from_array(cells)


def fold(factorisation: Factorisation, j: int) -> LatinSquare:
    """
    折叠得到 n-1 阶对称幂等拉丁方 I(F, j)

    Args:
        factorisation: 1-因子分解
        j: 被折叠的顶点（0 起始）

    Returns:
        LatinSquare: 对角线为 1..n-1 的拉丁方
    """
    n = factorisation.n
    if not 0 <= j < n:
        raise FactorError(f"顶点 {j} 超出范围 [0, {n})")
    u = np.array(unipotent_square(factorisation).array)
    keep = [i for i in range(n) if i != j]
    diagonal = u[keep, j]
    folded = u[np.ix_(keep, keep)]
    np.fill_diagonal(folded, diagonal)
    # 对角线是横截线，按对角线重命名符号
    rename = np.zeros(n, dtype=np.int32)
    rename[diagonal] = np.arange(1, n)
    return LatinSquare.from_array(rename[folded])


def species_count(factorisation: Factorisation, group: Optional[AutGroup] = None) -> int:
    """
    I(F, j) 给出的种类数，等于 Aut(F) 在顶点上的轨道数
    """
    group = group if group is not None else automorphism_group(factorisation)
    return len(group.orbits())


@dataclass
class FoldReport:
    """全部 n 个折叠的分类汇总"""
    n: int
    folds: List[Tuple[int, LatinClassification]] = field(default_factory=list)

    @property
    def symbol_hamiltonian(self) -> int:
        return sum(1 for _, c in self.folds if c.symbol_hamiltonian)

    @property
    def atomic(self) -> int:
        return sum(1 for _, c in self.folds if c.atomic)

    def summary(self) -> str:
        return f"symbol-Hamiltonian: {self.symbol_hamiltonian}/{len(self.folds)}, atomic: {self.atomic}"

    def to_dict(self) -> Dict:
        return {
            "n": self.n,
            "symbol_hamiltonian": self.symbol_hamiltonian,
            "atomic": self.atomic,
            "folds": [{"vertex": vertex_name(j, self.n), **c.to_dict()} for j, c in self.folds],
        }


def fold_report(factorisation: Factorisation, vertices: Optional[List[int]] = None) -> FoldReport:
    """
    对指定顶点（默认全部）折叠并分类

    Args:
        factorisation: 1-因子分解
        vertices: 折叠的顶点列表

    Returns:
        FoldReport: 折叠汇总
    """
    vertices = list(range(factorisation.n)) if vertices is None else vertices
    report = FoldReport(factorisation.n)
    for j in vertices:
        report.folds.append((j, classify(fold(factorisation, j))))
    return report
