"""
完美匹配的枚举
按字典序生成 K_n 的完美匹配；可要求与若干固定因子相容（并为 Hamilton 圈），
生成过程中维护每个固定因子的路径端点，一旦提前闭合就剪枝
"""

from typing import Iterator, List, Optional, Sequence, Tuple

from src.core.factorisation.edges import check_order, edge_index
from src.core.factorisation.one_factor import OneFactor


def iter_perfect_matchings(n: int, containing: Optional[Tuple[int, int]] = None) -> Iterator[OneFactor]:
    """
    枚举 K_n 的全部完美匹配（可指定必须包含的边）

    Args:
        n: 阶数
        containing: 必须包含的边 (u, v)

    Returns:
        Iterator[OneFactor]: 按 token 字典序生成
    """
    yield from compatible_matchings(n, (), containing=containing)


def count_perfect_matchings(n: int, containing: Optional[Tuple[int, int]] = None) -> int:
    return sum(1 for _ in iter_perfect_matchings(n, containing))


class _PathTracker:
    """
    记录 fixed[k] ∪ 部分匹配 中各路径的端点

    ends[k][v] 是包含未匹配顶点 v 的路径的另一端。
    """

    def __init__(self, n: int, fixed: Sequence[OneFactor]):
        self.n = n
        self.ends = [list(f.partner) for f in fixed]
        self.partner: List[int] = [-1] * n
        self.placed = 0

    def place(self, u: int, w: int) -> Optional[List[Tuple[List[int], int, int]]]:
        """加入边 uw；若某个并提前闭合成圈则返回 None"""
        last = self.placed + 1 == self.n // 2
        undo = []
        for end in self.ends:
            if end[u] == w:
                # 最后一条边闭合的是覆盖全部顶点的圈
                if last:
                    continue
                self._restore(undo, u, w)
                return None
            a, b = end[u], end[w]
            end[a], end[b] = b, a
            undo.append((end, a, b))
        self.partner[u], self.partner[w] = w, u
        self.placed += 1
        return undo

    def remove(self, u: int, w: int, undo: List[Tuple[List[int], int, int]]) -> None:
        self._restore(undo, u, w)
        self.partner[u] = self.partner[w] = -1
        self.placed -= 1

    @staticmethod
    def _restore(undo: List[Tuple[List[int], int, int]], u: int, w: int) -> None:
        for end, a, b in undo:
            end[a], end[b] = u, w
        undo.clear()


def compatible_matchings(
    n: int,
    fixed: Sequence[OneFactor],
    containing: Optional[Tuple[int, int]] = None,
    forbidden_edges: int = 0,
) -> Iterator[OneFactor]:
    """
    枚举与 fixed 中每个因子都相容的完美匹配

    Args:
        n: 阶数
        fixed: 固定因子
        containing: 必须包含的边
        forbidden_edges: 不允许使用的边位向量

    Returns:
        Iterator[OneFactor]: 按 token 字典序生成
    """
    check_order(n)
    ids = edge_index(n).ids
    tracker = _PathTracker(n, fixed)
    partner = tracker.partner

    if containing is not None:
        u, w = sorted(containing)
        if (forbidden_edges >> int(ids[u, w])) & 1 or tracker.place(u, w) is None:
            return

    def extend(v: int) -> Iterator[OneFactor]:
        while v < n and partner[v] != -1:
            v += 1
        if v == n:
            yield OneFactor(tuple(partner))
            return
        for w in range(v + 1, n):
            if partner[w] != -1 or (forbidden_edges >> int(ids[v, w])) & 1:
                continue
            undo = tracker.place(v, w)
            if undo is None:
                continue
            yield from extend(v + 1)
            tracker.remove(v, w, undo)

    yield from extend(0)
