"""
无同构回溯枚举

对每个种子 (F1, F2, F3)：
1. 枚举 𝒯 并维护“活跃”因子集合；
2. 每一步选择被最少活跃因子包含的未用边（并列取最小编号），逐个尝试包含它的活跃因子；
3. 加入新因子后检查是否存在重标号给出更小的三因子前缀，存在则剪枝；
4. 否则以相容性行与活跃集合求交后继续；
5. 找到的 P1F 规范标号后输出。

不同种子之间相互独立，由进程池并行处理；结果流与检查点只在主进程写入。
"""

import random
import time
from collections import Counter
from concurrent.futures import ProcessPoolExecutor, as_completed
from dataclasses import dataclass, field
from pathlib import Path
from typing import Callable, Dict, List, Optional, Sequence, Tuple, Union

import numpy as np
from sortedcontainers import SortedSet
from tqdm import tqdm

from src.config.settings import settings
from src.core.canon import build_aut_group, canonicalize
from src.core.catalogue.line_codec import emit_line
from src.core.factorisation import Edge, Factorisation, OneFactor, check_order, edge_index
from src.core.search.checkpoint import Checkpoint
from src.core.search.compat_table import CompatTable, build_compat_table
from src.core.search.seeds import Seed, gen_seeds, has_smaller_prefix, owner_matrix
from src.utils.logging import get_logger

logger = get_logger(__name__)

# (canonical_line, aut_order, cycle_type_text)
FoundRecord = Tuple[str, int, str]
Sink = Callable[[Sequence[str]], int]


@dataclass
class SearchState:
    """
    搜索状态

    Attributes:
        chosen: 已选因子（以 F1, F2, F3 开头）
        active: 𝒯 上的布尔掩码，与全部已选因子相容的因子
        used_edges: 已用边的布尔掩码
    """
    chosen: List[OneFactor]
    active: np.ndarray
    used_edges: np.ndarray

    @classmethod
    def initial(cls, seed: Seed, table: CompatTable) -> "SearchState":
        chosen = list(seed.initial_factors())
        used = np.zeros(table.edge_matrix.shape[1], dtype=bool)
        for f in chosen:
            used[f.edge_ids()] = True
        return cls(chosen, np.ones(len(table), dtype=bool), used)

    def is_complete(self) -> bool:
        return len(self.chosen) == self.chosen[0].n - 1


def _branch_edge(state: SearchState, table: CompatTable) -> Tuple[int, int]:
    counts = table.edge_counts(state.active)
    masked = np.where(state.used_edges, np.iinfo(np.int32).max, counts)
    edge_id = int(np.argmin(masked))
    return edge_id, int(masked[edge_id])


def select_branch_edge(state: SearchState, table: CompatTable) -> Edge:
    """
    选择被最少活跃因子包含的未用边，并列时取最小编号

    Args:
        state: 搜索状态（未完成）
        table: 相容性表

    Returns:
        Edge: 分支边；若某未用边不被任何活跃因子包含，返回的正是它
    """
    edge_id, _ = _branch_edge(state, table)
    return edge_index(table.n).edges[edge_id]


@dataclass
class SeedResult:
    """单个种子的搜索结果"""
    seed_index: int
    records: List[FoundRecord] = field(default_factory=list)
    nodes: int = 0
    table_size: int = 0
    elapsed: float = 0.0

    @property
    def count(self) -> int:
        return len(self.records)


class SeedSearch:
    """单个种子的回溯搜索"""

    def __init__(self, seed: Seed, table: Optional[CompatTable] = None):
        self.seed = seed
        self.n = seed.n
        self.table = table if table is not None else build_compat_table(seed)
        self.bound = seed.F3.sort_key
        self.found: Dict[str, FoundRecord] = {}
        self.nodes = 0

    def run(self) -> SeedResult:
        start = time.perf_counter()
        state = SearchState.initial(self.seed, self.table)
        partners = [f.partner for f in state.chosen]
        owner = owner_matrix(self.n, partners)
        self._extend(state, partners, owner)
        result = SeedResult(
            seed_index=self.seed.index,
            records=sorted(self.found.values()),
            nodes=self.nodes,
            table_size=len(self.table),
            elapsed=time.perf_counter() - start,
        )
        logger.debug(f"种子 {self.seed.index}: |T|={result.table_size} 节点={result.nodes} P1F={result.count}")
        return result

    def _emit(self, chosen: List[OneFactor]) -> None:
        canonical = canonicalize(Factorisation(self.n, tuple(chosen)), check=False)
        line = emit_line(canonical.factorisation)
        if line not in self.found:
            group = build_aut_group(canonical.automorphisms())
            self.found[line] = (line, group.order, group.cycle_type_text)

    def _extend(self, state: SearchState, partners: List[Tuple[int, ...]], owner: List[List[int]]) -> None:
        self.nodes += 1
        if state.is_complete():
            self._emit(state.chosen)
            return
        needed = self.n - 1 - len(state.chosen)
        if int(state.active.sum()) < needed:
            return
        edge_id, count = _branch_edge(state, self.table)
        if count == 0:
            return
        active_idx = np.flatnonzero(state.active)
        candidates = np.flatnonzero(state.active & self.table.edge_matrix[:, edge_id])
        newest = len(partners)
        for t in candidates:
            factor = self.table.factors[t]
            partners.append(factor.partner)
            for v, p in enumerate(factor.partner):
                owner[v][p] = newest
            if not has_smaller_prefix(partners, owner, self.bound, newest=newest):
                keep = self.table.compatible_with(factor.partner, active_idx)
                active = np.zeros_like(state.active)
                active[active_idx[keep]] = True
                used = state.used_edges | self.table.edge_matrix[t]
                self._extend(SearchState(state.chosen + [factor], active, used), partners, owner)
            for v, p in enumerate(factor.partner):
                owner[v][p] = -1
            partners.pop()


def search_seed(seed: Seed, table: Optional[CompatTable] = None) -> SeedResult:
    """搜索单个种子"""
    return SeedSearch(seed, table).run()


def _search_seed_task(n: int, seed_index: int, f3_partner: Tuple[int, ...]) -> SeedResult:
    # 进程池入口：只传递可序列化的最小数据
    return search_seed(Seed(seed_index, OneFactor(f3_partner)))


@dataclass
class SeedStats:
    count: int
    nodes: int
    elapsed: float = 0.0
    from_checkpoint: bool = False


@dataclass
class EnumerationSummary:
    """枚举汇总，可结合地合并"""
    n: int
    seeds_total: int
    seed_order: str = "natural"
    per_seed: Dict[int, SeedStats] = field(default_factory=dict)
    emitted: int = 0
    distinct: int = 0
    aut_orders: Counter = field(default_factory=Counter)
    cycle_types: Counter = field(default_factory=Counter)
    elapsed: float = 0.0

    @property
    def seeds_run(self) -> int:
        return sum(1 for s in self.per_seed.values() if not s.from_checkpoint)

    @property
    def nodes(self) -> int:
        return sum(s.nodes for s in self.per_seed.values())

    @property
    def total_count(self) -> int:
        return sum(s.count for s in self.per_seed.values())

    @property
    def nontrivial_aut(self) -> int:
        return sum(c for order, c in self.aut_orders.items() if order > 1)

    def add(self, result: SeedResult, new_lines: int) -> None:
        self.per_seed[result.seed_index] = SeedStats(result.count, result.nodes, result.elapsed)
        self.emitted += result.count
        self.distinct += new_lines
        for _, order, cycle_type in result.records:
            self.aut_orders[order] += 1
            if order > 1:
                self.cycle_types[cycle_type] += 1

    def merge(self, other: "EnumerationSummary") -> "EnumerationSummary":
        if (self.n, self.seeds_total) != (other.n, other.seeds_total):
            raise ValueError("不能合并不同枚举的汇总")
        merged = EnumerationSummary(self.n, self.seeds_total, self.seed_order)
        merged.per_seed = {**self.per_seed, **other.per_seed}
        merged.emitted = self.emitted + other.emitted
        merged.distinct = self.distinct + other.distinct
        merged.aut_orders = self.aut_orders + other.aut_orders
        merged.cycle_types = self.cycle_types + other.cycle_types
        merged.elapsed = self.elapsed + other.elapsed
        return merged

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "seeds_total": self.seeds_total,
            "seed_order": self.seed_order,
            "seeds_run": self.seeds_run,
            "seeds_from_checkpoint": len(self.per_seed) - self.seeds_run,
            "p1f_count": self.total_count,
            "distinct_lines": self.distinct,
            "nontrivial_aut": self.nontrivial_aut,
            "aut_orders": dict(sorted(self.aut_orders.items())),
            "cycle_types": dict(sorted(self.cycle_types.items())),
            "nodes": self.nodes,
            "elapsed": round(self.elapsed, 3),
        }


class MemorySink:
    """内存中的结果接收器（按规范行去重）"""

    def __init__(self):
        self.lines = SortedSet()

    def __call__(self, lines: Sequence[str]) -> int:
        before = len(self.lines)
        self.lines.update(lines)
        return len(self.lines) - before


class ResultFileSink(MemorySink):
    """
    追加写入的结果文件；打开时读入已有行，续跑不会重复写入
    """

    def __init__(self, path: Union[str, Path]):
        super().__init__()
        self.path = Path(path)
        self.path.parent.mkdir(parents=True, exist_ok=True)
        if self.path.exists():
            with open(self.path, "r", encoding="utf-8") as f:
                self.lines.update(line.strip() for line in f if line.strip())

    def __call__(self, lines: Sequence[str]) -> int:
        fresh = [line for line in lines if line not in self.lines]
        if fresh:
            with open(self.path, "a", encoding="utf-8") as f:
                for line in fresh:
                    f.write(line + "\n")
        return super().__call__(fresh)


def dedupe_result_file(path: Union[str, Path]) -> Tuple[int, int]:
    """
    合并后的去重：按规范行去重并排序后重写结果文件

    Returns:
        Tuple[int, int]: (去重前行数, 去重后行数)
    """
    path = Path(path)
    with open(path, "r", encoding="utf-8") as f:
        lines = [line.strip() for line in f if line.strip()]
    unique = SortedSet(lines)
    with open(path, "w", encoding="utf-8") as f:
        for line in unique:
            f.write(line + "\n")
    if len(unique) != len(lines):
        logger.warning(f"结果文件中去除了 {len(lines) - len(unique)} 个重复行")
    return len(lines), len(unique)


def _select_seeds(seeds: List[Seed], seed_range: Optional[Tuple[int, int]]) -> List[Seed]:
    if seed_range is None:
        return list(seeds)
    lo, hi = seed_range
    if lo < 0 or hi < lo or hi >= len(seeds):
        raise ValueError(f"种子范围 {lo}..{hi} 超出 0..{len(seeds) - 1}")
    return seeds[lo:hi + 1]


def enumerate_p1fs(
    n: int,
    seed_range: Optional[Tuple[int, int]] = None,
    sink: Optional[Sink] = None,
    checkpoint: Optional[Union[str, Path]] = None,
    workers: Optional[int] = None,
    seed_order: str = "natural",
    shuffle_seed: int = 0,
    show_progress: bool = False,
    seeds: Optional[List[Seed]] = None,
) -> EnumerationSummary:
    """
    枚举 K_n 的全部 P1F（每个同构类恰好一次，规范标号）

    Args:
        n: 阶数
        seed_range: 种子编号闭区间 (lo, hi)，默认全部
        sink: 结果接收器，接收规范行列表并返回新行数；默认 MemorySink
        checkpoint: 检查点文件路径
        workers: 并行进程数（默认 settings.threads）
        seed_order: "natural" 或 "shuffled"
        shuffle_seed: 打乱顺序的随机种子
        show_progress: 是否显示 tqdm 进度条
        seeds: 预先生成的种子（默认调用 gen_seeds）

    Returns:
        EnumerationSummary: 枚举汇总
    """
    check_order(n)
    if seed_order not in ("natural", "shuffled"):
        raise ValueError(f"未知的种子顺序: {seed_order}")
    start = time.perf_counter()
    all_seeds = seeds if seeds is not None else gen_seeds(n)
    selected = _select_seeds(all_seeds, seed_range)
    if seed_order == "shuffled":
        random.Random(shuffle_seed).shuffle(selected)
    sink = sink if sink is not None else MemorySink()
    summary = EnumerationSummary(n, len(all_seeds), seed_order)

    tracker = Checkpoint(checkpoint, n, len(all_seeds), settings.checkpoint_version) if checkpoint else None
    pending = []
    for seed in selected:
        record = tracker.get(seed.index) if tracker else None
        if record is not None and tracker.is_done(seed.index):
            summary.per_seed[seed.index] = SeedStats(record.count, record.nodes, from_checkpoint=True)
        else:
            pending.append(seed)

    workers = workers or settings.threads
    logger.info(f"开始枚举 n={n}: {len(pending)} 个种子待处理，{len(selected) - len(pending)} 个已完成，workers={workers}")

    def consume(result: SeedResult) -> None:
        new_lines = sink([line for line, _, _ in result.records])
        summary.add(result, new_lines)
        if tracker:
            tracker.mark_done(result.seed_index, result.count, result.nodes)

    with tqdm(total=len(pending), desc=f"K{n} seeds", disable=not show_progress) as progress:
        if workers <= 1 or len(pending) <= 1:
            for seed in pending:
                consume(search_seed(seed))
                progress.update(1)
        else:
            with ProcessPoolExecutor(max_workers=workers) as pool:
                futures = [pool.submit(_search_seed_task, n, s.index, s.F3.partner) for s in pending]
                for future in as_completed(futures):
                    consume(future.result())
                    progress.update(1)

    summary.elapsed = time.perf_counter() - start
    logger.info(f"枚举完成 n={n}: {summary.total_count} 个 P1F，{summary.distinct} 个新规范行，用时 {summary.elapsed:.1f}s")
    return summary
