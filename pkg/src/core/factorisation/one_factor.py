"""
1-因子与1-因子分解
提供 OneFactor / Factorisation 类型、两个因子之并的轮换结构、相容性判断以及 P1F 校验
"""

from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import Dict, Iterable, List, Sequence, Tuple, Any

import numpy as np

from src.core.errors import FactorError
from src.core.factorisation.edges import check_order, edge_count, edge_index, vertex_name


@dataclass(frozen=True)
class OneFactor:
    """
    K_n 的一个完美匹配

    Attributes:
        partner: partner[v] 为与 v 匹配的顶点（无不动点的对合）
        edges: 长度为 n(n-1)/2 的边位向量（Python int）
    """
    partner: Tuple[int, ...]
    edges: int = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        partner = tuple(int(p) for p in self.partner)
        n = len(partner)
        check_order(n)
        bits = 0
        ids = edge_index(n).ids
        for v, p in enumerate(partner):
            if not 0 <= p < n:
                raise FactorError(f"顶点 {v} 的配对 {p} 超出范围")
            if p == v or partner[p] != v:
                raise FactorError(f"partner 不是无不动点的对合: 顶点 {vertex_name(v, n)}")
            if v < p:
                bits |= 1 << int(ids[v, p])
        object.__setattr__(self, "partner", partner)
        object.__setattr__(self, "edges", bits)

    @classmethod
    def from_edges(cls, n: int, pairs: Iterable[Tuple[int, int]]) -> "OneFactor":
        """由边列表构造1-因子"""
        partner = [-1] * n
        for u, v in pairs:
            if u == v or not (0 <= u < n and 0 <= v < n):
                raise FactorError(f"非法的边 ({u}, {v})")
            if partner[u] != -1 or partner[v] != -1:
                raise FactorError(f"顶点重复出现: ({u}, {v})")
            partner[u], partner[v] = v, u
        if -1 in partner:
            raise FactorError(f"边列表没有覆盖全部 {n} 个顶点")
        return cls(tuple(partner))

    @property
    def n(self) -> int:
        return len(self.partner)

    def edge_pairs(self) -> List[Tuple[int, int]]:
        """按较小端点升序排列的边"""
        return [(v, p) for v, p in enumerate(self.partner) if v < p]

    def edge_ids(self) -> List[int]:
        ids = edge_index(self.n).ids
        return [int(ids[v, p]) for v, p in self.edge_pairs()]

    def contains(self, u: int, v: int) -> bool:
        return self.partner[u] == v

    @property
    def sort_key(self) -> Tuple[int, ...]:
        """与目录 token 的字典序一致的排序键"""
        return tuple(x for pair in self.edge_pairs() for x in pair)

    def relabel(self, perm: Sequence[int]) -> "OneFactor":
        """按 perm（旧标号 -> 新标号）重新标号"""
        new_partner = [0] * self.n
        for v, p in enumerate(self.partner):
            new_partner[perm[v]] = perm[p]
        return OneFactor(tuple(new_partner))

    def describe(self) -> str:
        n = self.n
        return "{" + ", ".join(vertex_name(u, n) + vertex_name(v, n) for u, v in self.edge_pairs()) + "}"


@dataclass(frozen=True)
class Factorisation:
    """
    K_n 的（候选）1-因子分解：n-1 个1-因子，按 token 升序保存

    构造时只检查各因子的阶数；边划分与完美性由 validate_p1f 报告。
    """
    n: int
    factors: Tuple[OneFactor, ...]

    def __post_init__(self):
        check_order(self.n)
        factors = tuple(self.factors)
        for f in factors:
            if f.n != self.n:
                raise FactorError(f"因子阶数 {f.n} 与分解阶数 {self.n} 不一致")
        object.__setattr__(self, "factors", tuple(sorted(factors, key=lambda f: f.sort_key)))

    @classmethod
    def from_partners(cls, partners: Iterable[Sequence[int]]) -> "Factorisation":
        factors = [OneFactor(tuple(p)) for p in partners]
        if not factors:
            raise FactorError("因子列表为空")
        return cls(factors[0].n, tuple(factors))

    def __len__(self) -> int:
        return len(self.factors)

    def __iter__(self):
        return iter(self.factors)

    @cached_property
    def owner(self) -> np.ndarray:
        """owner[u, v] 为包含边 uv 的因子下标（未覆盖为 -1）"""
        owner = np.full((self.n, self.n), -1, dtype=np.int32)
        for k, f in enumerate(self.factors):
            for v, p in enumerate(f.partner):
                owner[v, p] = k
        owner.setflags(write=False)
        return owner

    @cached_property
    def partner_matrix(self) -> np.ndarray:
        """(n-1) x n 的配对矩阵"""
        return np.array([f.partner for f in self.factors], dtype=np.int32)

    def index_of(self, factor: OneFactor) -> int:
        return self.factors.index(factor)

    def relabel(self, perm: Sequence[int]) -> "Factorisation":
        return Factorisation(self.n, tuple(f.relabel(perm) for f in self.factors))


@dataclass(frozen=True)
class CycleStructure:
    """两个1-因子之并（多重图）的轮换分解"""
    lengths: Tuple[int, ...]
    cycles: Tuple[Tuple[int, ...], ...]

    @property
    def is_hamiltonian(self) -> bool:
        return len(self.lengths) == 1


@dataclass
class ValidationReport:
    """validate_p1f 的报告"""
    n: int
    factor_count: int
    uncovered_edges: List[Tuple[int, int]] = field(default_factory=list)
    multiply_covered_edges: List[Tuple[int, int]] = field(default_factory=list)
    incompatible_pairs: List[Tuple[int, int, Tuple[int, ...]]] = field(default_factory=list)

    @property
    def is_partition(self) -> bool:
        return (self.factor_count == self.n - 1
                and not self.uncovered_edges
                and not self.multiply_covered_edges)

    @property
    def is_perfect(self) -> bool:
        return self.is_partition and not self.incompatible_pairs

    def to_dict(self) -> Dict[str, Any]:
        name = lambda e: vertex_name(e[0], self.n) + vertex_name(e[1], self.n)
        return {
            "n": self.n,
            "factor_count": self.factor_count,
            "is_partition": self.is_partition,
            "is_perfect": self.is_perfect,
            "uncovered_edges": [name(e) for e in self.uncovered_edges],
            "multiply_covered_edges": [name(e) for e in self.multiply_covered_edges],
            "incompatible_pairs": [
                {"factors": [i, j], "cycle_lengths": list(lengths)}
                for i, j, lengths in self.incompatible_pairs
            ],
        }


def make_F1_F2(n: int) -> Tuple[OneFactor, OneFactor]:
    """
    固定因子 F1 = {ab, cd, ...} 与 F2 = {a(n), bc, de, ...}，二者之并为 Hamilton 圈 a-b-c-...-a

    Args:
        n: 阶数（偶数，>= 4）

    Returns:
        Tuple[OneFactor, OneFactor]: (F1, F2)
    """
    check_order(n)
    f1 = OneFactor.from_edges(n, [(i, i + 1) for i in range(0, n, 2)])
    f2 = OneFactor.from_edges(n, [(0, n - 1)] + [(i, i + 1) for i in range(1, n - 1, 2)])
    return f1, f2


def _check_pair(f: OneFactor, g: OneFactor) -> None:
    if f.n != g.n:
        raise FactorError(f"两个因子的阶数不一致: {f.n} != {g.n}")
    if f.partner == g.partner:
        raise FactorError("两个因子相同")


def factor_union_cycles(f: OneFactor, g: OneFactor) -> CycleStructure:
    """
    计算 F ∪ G 的轮换结构，公共边给出长度为2的圈

    Args:
        f: 1-因子
        g: 另一个不同的1-因子

    Returns:
        CycleStructure: 圈长（升序）与各圈顶点序列
    """
    _check_pair(f, g)
    seen = [False] * f.n
    cycles = []
    for start in range(f.n):
        if seen[start]:
            continue
        cycle = []
        v = start
        while True:
            u = f.partner[v]
            cycle.extend((v, u))
            seen[v] = seen[u] = True
            v = g.partner[u]
            if v == start:
                break
        cycles.append(tuple(cycle))
    cycles.sort(key=len)
    return CycleStructure(tuple(len(c) for c in cycles), tuple(cycles))


def is_compatible(f: OneFactor, g: OneFactor) -> bool:
    """F ∪ G 是否为 Hamilton 圈"""
    _check_pair(f, g)
    fp, gp = f.partner, g.partner
    v = gp[fp[0]]
    for _ in range(f.n // 2 - 1):
        if v == 0:
            return False
        v = gp[fp[v]]
    return True


def validate_p1f(factorisation: Factorisation) -> ValidationReport:
    """
    校验候选分解：(a) 是否为边集划分，(b) 每对因子是否相容

    失败信息写入报告，不抛出异常。
    """
    n = factorisation.n
    report = ValidationReport(n=n, factor_count=len(factorisation.factors))
    index = edge_index(n)
    cover = [0] * edge_count(n)
    for f in factorisation.factors:
        for eid in f.edge_ids():
            cover[eid] += 1
    for eid, times in enumerate(cover):
        if times == 0:
            report.uncovered_edges.append(index.endpoints(eid))
        elif times > 1:
            report.multiply_covered_edges.append(index.endpoints(eid))
    for i, j in combinations(range(len(factorisation.factors)), 2):
        f, g = factorisation.factors[i], factorisation.factors[j]
        if f.partner == g.partner:
            report.incompatible_pairs.append((i, j, (2,) * (n // 2)))
            continue
        structure = factor_union_cycles(f, g)
        if not structure.is_hamiltonian:
            report.incompatible_pairs.append((i, j, structure.lengths))
    return report


def is_p1f(factorisation: Factorisation) -> bool:
    return validate_p1f(factorisation).is_perfect
