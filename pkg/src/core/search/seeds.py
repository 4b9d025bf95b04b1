"""
初始三因子 (F1, F2, F3) 的生成

F3 取遍包含边 ac、且与 F1、F2 都相容的1-因子；在三因子组的每个同构类中
只保留 F3 字典序最小者。前缀比较与搜索中的字典序剪枝共用 has_smaller_prefix。
"""

from dataclasses import dataclass
from functools import lru_cache
from typing import List, Optional, Sequence, Tuple

from src.core.canon import cycle_alignments, relabelled_key
from src.core.factorisation import OneFactor, check_order, compatible_matchings, make_F1_F2
from src.utils.logging import get_logger

logger = get_logger(__name__)

# 第三个因子必须包含的边 a-c
SEED_EDGE = (0, 2)

Alignment = Tuple[Tuple[int, ...], Tuple[int, ...]]


@dataclass(frozen=True)
class Seed:
    """
    搜索的起点

    Attributes:
        index: 种子编号（按 F3 的 token 升序）
        F3: 第三个因子，包含边 ac
    """
    index: int
    F3: OneFactor

    @property
    def n(self) -> int:
        return self.F3.n

    def initial_factors(self) -> Tuple[OneFactor, OneFactor, OneFactor]:
        f1, f2 = make_F1_F2(self.n)
        return f1, f2, self.F3


@lru_cache(maxsize=8192)
def _alignments(f: Tuple[int, ...], g: Tuple[int, ...]) -> Tuple[Alignment, ...]:
    return tuple((tuple(label), tuple(inverse)) for label, inverse in cycle_alignments(f, g))


def owner_matrix(n: int, partners: Sequence[Sequence[int]]) -> List[List[int]]:
    """部分分解的边归属表：owner[u][v] 为包含 uv 的因子下标，未使用为 -1"""
    owner = [[-1] * n for _ in range(n)]
    for k, partner in enumerate(partners):
        for v, p in enumerate(partner):
            owner[v][p] = k
    return owner


def has_smaller_prefix(
    partners: Sequence[Tuple[int, ...]],
    owner: Sequence[Sequence[int]],
    bound: Tuple[int, ...],
    newest: Optional[int] = None,
) -> bool:
    """
    部分分解是否存在某个重标号，使包含 ac 的第三个因子字典序小于 bound

    Args:
        partners: 部分分解各因子的 partner 元组
        owner: 边归属表
        bound: 当前种子 F3 的排序键
        newest: 只检查涉及最新因子的候选（其余候选已在祖先节点检查过）

    Returns:
        bool: 存在更小前缀时为 True
    """
    a, c = SEED_EDGE
    count = len(partners)
    for i in range(count):
        for j in range(count):
            if i == j:
                continue
            involves = newest is None or newest in (i, j)
            for label, inverse in _alignments(partners[i], partners[j]):
                k = owner[inverse[a]][inverse[c]]
                if k < 0 or (not involves and k != newest):
                    continue
                if relabelled_key(partners[k], label, inverse) < bound:
                    return True
    return False


def is_seed_representative(f3: OneFactor) -> bool:
    """F3 是否为其三因子组同构类中字典序最小的代表"""
    f1, f2 = make_F1_F2(f3.n)
    partners = (f1.partner, f2.partner, f3.partner)
    return not has_smaller_prefix(partners, owner_matrix(f3.n, partners), f3.sort_key)


def gen_seeds(n: int) -> List[Seed]:
    """
    生成全部种子

    Args:
        n: 阶数

    Returns:
        List[Seed]: 每个同构类一个种子，按 F3 的 token 升序编号
    """
    check_order(n)
    f1, f2 = make_F1_F2(n)
    seeds: List[Seed] = []
    candidates = 0
    for f3 in compatible_matchings(n, (f1, f2), containing=SEED_EDGE):
        candidates += 1
        if is_seed_representative(f3):
            seeds.append(Seed(len(seeds), f3))
    logger.info(f"n={n}: {candidates} 个候选 F3，{len(seeds)} 个种子")
    return seeds
