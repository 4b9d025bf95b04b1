"""
顶点与边的编号
边 (lo, hi) 按字典序获得稠密编号，1-因子因此可以表示为位向量
"""

import string
from dataclasses import dataclass
from functools import lru_cache
from typing import List, Tuple

import numpy as np

from src.core.errors import InvalidOrderError

LETTERS = string.ascii_lowercase


def check_order(n: int) -> int:
    """检查阶数：n 必须为偶数且 n >= 4"""
    if not isinstance(n, (int, np.integer)) or n < 4 or n % 2:
        raise InvalidOrderError(n)
    return int(n)


def vertex_name(v: int, n: int) -> str:
    """顶点名称：n <= 26 时使用小写字母，否则使用十进制编号"""
    if n <= len(LETTERS):
        return LETTERS[v]
    return str(v)


def edge_count(n: int) -> int:
    return n * (n - 1) // 2


@dataclass(frozen=True)
class Edge:
    """K_n 的一条边，lo < hi"""
    lo: int
    hi: int
    id: int

    def name(self, n: int) -> str:
        return vertex_name(self.lo, n) + vertex_name(self.hi, n)


class EdgeIndex:
    """
    K_n 的边编号表

    Attributes:
        n: 阶数
        edges: 按编号排列的 Edge 列表
        ids: n x n 矩阵，ids[u, v] 为边 uv 的编号，对角线为 -1
    """

    def __init__(self, n: int):
        self.n = check_order(n)
        self.edges: List[Edge] = []
        self.ids = np.full((n, n), -1, dtype=np.int32)
        for lo in range(n):
            for hi in range(lo + 1, n):
                edge = Edge(lo, hi, len(self.edges))
                self.edges.append(edge)
                self.ids[lo, hi] = self.ids[hi, lo] = edge.id
        self.ids.setflags(write=False)

    @property
    def size(self) -> int:
        return len(self.edges)

    def id_of(self, u: int, v: int) -> int:
        if u == v:
            raise ValueError(f"自环不是 K_{self.n} 的边: {u}")
        return int(self.ids[u, v])

    def endpoints(self, edge_id: int) -> Tuple[int, int]:
        edge = self.edges[edge_id]
        return edge.lo, edge.hi


@lru_cache(maxsize=None)
def edge_index(n: int) -> EdgeIndex:
    """按阶数缓存的边编号表"""
    return EdgeIndex(n)
