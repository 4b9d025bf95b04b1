"""
列车（train）及其不变量

列车是 (边, 因子) 对上的函数有向图：
    succ(({a,b}, f)) = ({F_f(a), F_f(b)}, 包含 {a,b} 的因子)
顶点编号 v = e * (n-1) + f，其中 e 为边编号，f 为因子下标。
"""

import hashlib
from dataclasses import dataclass
from functools import cached_property
from typing import Dict, List, Tuple

import numpy as np

from src.core.errors import FactorError
from src.core.factorisation import Edge, Factorisation, edge_index


@dataclass(frozen=True)
class Train:
    """
    列车

    Attributes:
        n: 阶数
        succ: 每个顶点唯一出弧的终点
    """
    n: int
    succ: np.ndarray

    @property
    def factor_count(self) -> int:
        return self.n - 1

    @property
    def vertex_count(self) -> int:
        return len(self.succ)

    def vertex(self, edge_id: int, factor: int) -> int:
        return edge_id * self.factor_count + factor

    def decode(self, v: int) -> Tuple[Edge, int]:
        edge_id, factor = divmod(int(v), self.factor_count)
        return edge_index(self.n).edges[edge_id], factor

    @cached_property
    def indegrees(self) -> np.ndarray:
        return np.bincount(self.succ, minlength=self.vertex_count)

    @property
    def loops(self) -> np.ndarray:
        return np.flatnonzero(self.succ == np.arange(self.vertex_count))


def build_train(factorisation: Factorisation) -> Train:
    """
    构造列车

    Args:
        factorisation: 1-因子分解（不要求完美）

    Returns:
        Train: 顶点数为 C(n,2)·(n-1) 的列车
    """
    n = factorisation.n
    index = edge_index(n)
    owner = np.asarray(factorisation.owner)
    lo = np.array([e.lo for e in index.edges], dtype=np.intp)
    hi = np.array([e.hi for e in index.edges], dtype=np.intp)
    g = owner[lo, hi]
    if len(factorisation) != n - 1 or (g < 0).any():
        raise FactorError("列车只对1-因子分解有定义")
    partners = np.asarray(factorisation.partner_matrix, dtype=np.intp)
    # 行对应边，列对应因子 f
    image = np.asarray(index.ids)[partners[:, lo].T, partners[:, hi].T]
    succ = (image.astype(np.int64) * (n - 1) + g[:, None]).ravel()
    return Train(n, succ)


@dataclass(frozen=True)
class IndegreeSequence:
    """tallies[i] 为入度恰为 i 的顶点数"""
    tallies: Tuple[int, ...]

    def as_list(self) -> List[int]:
        return list(self.tallies)


def indegree_sequence(train: Train) -> IndegreeSequence:
    """入度统计（自环计入入度）"""
    return IndegreeSequence(tuple(int(x) for x in np.bincount(train.indegrees)))


def path_lengths(train: Train) -> np.ndarray:
    """
    p(v)：沿唯一出弧到达第一个圈上顶点的步数；圈上（含自环）的顶点为 0

    每个顶点只解析一次。
    """
    size = train.vertex_count
    succ = train.succ
    p = np.full(size, -1, dtype=np.int64)
    # 0 未访问，1 在当前路径上，2 已解析
    state = np.zeros(size, dtype=np.int8)
    for start in range(size):
        if state[start]:
            continue
        path = []
        v = start
        while state[v] == 0:
            state[v] = 1
            path.append(v)
            v = int(succ[v])
        if state[v] == 1:
            cut = path.index(v)
            for w in path[cut:]:
                p[w] = 0
            tail = path[:cut]
            base = 0
        else:
            tail = path
            base = int(p[v])
        for k, w in enumerate(reversed(tail), start=1):
            p[w] = base + k
        for w in path:
            state[w] = 2
    return p


@dataclass(frozen=True)
class PVector:
    """counts[i] 为 p(v) = i 的顶点数，i = 0..max_i"""
    counts: Tuple[int, ...]

    def as_list(self) -> List[int]:
        return list(self.counts)


def p_vector(train: Train, max_i: int = 5) -> PVector:
    """p(v) 的计数向量"""
    if max_i < 0:
        raise ValueError("max_i 不能为负数")
    counts = np.bincount(path_lengths(train), minlength=max_i + 1)[:max_i + 1]
    return PVector(tuple(int(x) for x in counts))


def _tree_codes(train: Train, p: np.ndarray) -> Dict[int, str]:
    """圈上顶点所挂有根树的规范括号码"""
    children: Dict[int, List[str]] = {}
    codes: Dict[int, str] = {}
    for v in np.argsort(-p, kind="stable"):
        v = int(v)
        code = "(" + "".join(sorted(children.pop(v, []))) + ")"
        if p[v] == 0:
            codes[v] = code
        else:
            children.setdefault(int(train.succ[v]), []).append(code)
    return codes


def _min_rotation(items: List[str]) -> Tuple[str, ...]:
    return min(tuple(items[k:] + items[:k]) for k in range(len(items)))


def train_canonical_hash(train: Train) -> str:
    """
    列车的规范摘要：两列车作为无标号有向图同构当且仅当摘要相同

    圈上每个顶点挂一棵有根树，树取 AHU 括号码；每个圈取字典序最小的旋转；
    各连通分量的码排序后拼接，再取 blake2b 摘要。
    """
    p = path_lengths(train)
    codes = _tree_codes(train, p)
    seen = set()
    components = []
    for start in sorted(codes):
        if start in seen:
            continue
        cycle = []
        v = start
        while v not in seen:
            seen.add(v)
            cycle.append(codes[v])
            v = int(train.succ[v])
        components.append("[" + "".join(_min_rotation(cycle)) + "]")
    components.sort()
    digest = hashlib.blake2b(digest_size=16)
    for component in components:
        digest.update(component.encode("ascii"))
    return digest.hexdigest()
