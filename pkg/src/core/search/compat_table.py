"""
相容性表

𝒯 是与 F1、F2、F3 都相容的全部1-因子。相容性行按需计算并缓存：
一次把一个因子与多个因子做向量化的 partner 数组游走。
"""

from typing import Dict, List, Optional

import numpy as np

from src.core.factorisation import OneFactor, compatible_matchings, edge_count
from src.core.search.seeds import Seed
from src.utils.logging import get_logger

logger = get_logger(__name__)


class CompatTable:
    """
    种子的相容性表

    Attributes:
        seed: 所属种子
        factors: 𝒯 中的因子（按 token 升序）
        partners: |𝒯| x n 的 partner 矩阵
        edge_matrix: |𝒯| x n(n-1)/2 的布尔矩阵，edge_matrix[t, e] 表示因子 t 含边 e
        per_edge_counts: 初始状态下每条边被多少个因子包含
    """

    def __init__(self, seed: Seed, factors: List[OneFactor]):
        self.seed = seed
        self.n = seed.n
        self.factors = factors
        size = len(factors)
        self.partners = np.array([f.partner for f in factors], dtype=np.intp).reshape(size, self.n)
        self.edge_matrix = np.zeros((size, edge_count(self.n)), dtype=bool)
        for t, f in enumerate(factors):
            self.edge_matrix[t, f.edge_ids()] = True
        self.edge_weights = self.edge_matrix.astype(np.int32)
        self.per_edge_counts = self.edge_weights.sum(axis=0)
        self._rows: Dict[int, np.ndarray] = {}
        self._all = np.arange(size)

    def __len__(self) -> int:
        return len(self.factors)

    def compatible_with(self, partner, indices: Optional[np.ndarray] = None) -> np.ndarray:
        """
        给定因子与 𝒯 中若干因子是否相容

        Args:
            partner: 给定因子的 partner 数组
            indices: 𝒯 中的下标（默认全部）

        Returns:
            np.ndarray: 与 indices 对应的布尔数组
        """
        if indices is None:
            indices = self._all
        rows = self.partners[indices]
        f = np.asarray(partner, dtype=np.intp)
        ok = np.ones(len(indices), dtype=bool)
        if not len(indices):
            return ok
        pick = np.arange(len(indices))
        x = np.zeros(len(indices), dtype=np.intp)
        # 第一次回到顶点 a 恰在 n/2 步时并为 Hamilton 圈
        for _ in range(self.n // 2 - 1):
            x = rows[pick, f[x]]
            ok &= x != 0
        return ok

    def pair_row(self, i: int) -> np.ndarray:
        """pair_bits 的第 i 行（缓存）"""
        row = self._rows.get(i)
        if row is None:
            row = self.compatible_with(self.factors[i].partner)
            row.setflags(write=False)
            self._rows[i] = row
        return row

    @property
    def pair_bits(self) -> np.ndarray:
        """完整的 |𝒯| x |𝒯| 相容矩阵（对称，对角为 0）"""
        return np.array([self.pair_row(i) for i in range(len(self))], dtype=bool).reshape(len(self), len(self))

    def edge_counts(self, active: np.ndarray) -> np.ndarray:
        """每条边被多少个活跃因子包含"""
        return active.astype(np.int32) @ self.edge_weights


def build_compat_table(seed: Seed) -> CompatTable:
    """
    枚举 𝒯：与种子的三个初始因子都相容的全部1-因子

    Args:
        seed: 种子

    Returns:
        CompatTable: 相容性表
    """
    factors = list(compatible_matchings(seed.n, seed.initial_factors()))
    logger.debug(f"种子 {seed.index}: |T| = {len(factors)}")
    return CompatTable(seed, factors)
