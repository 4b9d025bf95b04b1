"""
小阶数的朴素枚举，用于核对无同构搜索

- brute_force_classes: 固定 F1、F2，每次对最小未用边尝试全部相容因子，规范化去重
- brute_force_seed_count: 对顶点的全部 n! 个置换求三因子组的最小代表
"""

from itertools import permutations
from typing import List, Optional, Set, Tuple

from src.core.canon import canonicalize
from src.core.catalogue.line_codec import emit_line
from src.core.factorisation import Factorisation, OneFactor, check_order, compatible_matchings, edge_index, make_F1_F2
from src.core.search.seeds import SEED_EDGE
from src.utils.logging import get_logger

logger = get_logger(__name__)

# 全置换的代价随 n! 增长
MAX_PERMUTATION_ORDER = 8


def brute_force_classes(n: int) -> List[str]:
    """
    朴素枚举 K_n 的全部 P1F 同构类

    Args:
        n: 阶数

    Returns:
        List[str]: 各类的规范行（升序）
    """
    check_order(n)
    index = edge_index(n)
    found: Set[str] = set()

    def extend(chosen: List[OneFactor], used: int) -> None:
        if len(chosen) == n - 1:
            canonical = canonicalize(Factorisation(n, tuple(chosen)), check=False)
            found.add(emit_line(canonical.factorisation))
            return
        edge_id = next(e for e in range(index.size) if not (used >> e) & 1)
        for f in compatible_matchings(n, chosen, containing=index.endpoints(edge_id), forbidden_edges=used):
            extend(chosen + [f], used | f.edges)

    f1, f2 = make_F1_F2(n)
    extend([f1, f2], f1.edges | f2.edges)
    logger.debug(f"朴素枚举 n={n}: {len(found)} 个同构类")
    return sorted(found)


def _normal_key(triple: Tuple[OneFactor, ...], f1: OneFactor, f2: OneFactor) -> Optional[Tuple[int, ...]]:
    partners = {f.partner for f in triple}
    if f1.partner not in partners or f2.partner not in partners:
        return None
    a, c = SEED_EDGE
    third = [f for f in triple if f.partner not in (f1.partner, f2.partner)]
    if len(third) != 1 or not third[0].contains(a, c):
        return None
    return third[0].sort_key


def brute_force_seed_count(n: int) -> int:
    """
    按定义统计种子数：含 F1、F2 与一个包含 ac 的第三因子的三因子组，在全部顶点置换下的类数

    Args:
        n: 阶数（不超过 MAX_PERMUTATION_ORDER）

    Returns:
        int: 种子数
    """
    check_order(n)
    if n > MAX_PERMUTATION_ORDER:
        raise ValueError(f"全置换核对只支持 n <= {MAX_PERMUTATION_ORDER}")
    f1, f2 = make_F1_F2(n)
    perms = list(permutations(range(n)))
    classes = set()
    for f3 in compatible_matchings(n, (f1, f2), containing=SEED_EDGE):
        best = None
        for perm in perms:
            key = _normal_key(tuple(f.relabel(perm) for f in (f1, f2, f3)), f1, f2)
            if key is not None and (best is None or key < best):
                best = key
        classes.add(best)
    return len(classes)
