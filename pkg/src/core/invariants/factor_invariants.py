"""
基于因子与 U(F) 的不变量：三色向量、顶点圈计数、逐行圈剖面，以及汇总报告
"""

from collections import Counter
from dataclasses import dataclass
from itertools import combinations
from typing import Callable, Dict, Hashable, Iterable, List, Optional, Sequence, Tuple

from src.core.errors import CalibrationError
from src.core.factorisation import Factorisation
from src.core.invariants.train import build_train, indegree_sequence, p_vector, train_canonical_hash
from src.core.latin import RowCycle, row_cycles, unipotent_square
from src.utils.logging import get_logger

logger = get_logger(__name__)

# 已发表的 K16 目录上三色向量的类数
TRICOLOUR_K16_CLASSES = 2320
K16_CATALOGUE_SIZE = 3155


def tricolour_vector(factorisation: Factorisation) -> Tuple[int, ...]:
    """
    三色向量：对每个无序因子三元组，统计三条边分别落在这三个因子中的三角形个数，排序后输出

    Args:
        factorisation: 1-因子分解

    Returns:
        Tuple[int, ...]: 长度为 C(n-1, 3) 的升序计数
    """
    n = factorisation.n
    owner = factorisation.owner
    counts: Counter = Counter()
    for x, y, z in combinations(range(n), 3):
        triple = tuple(sorted((int(owner[x, y]), int(owner[y, z]), int(owner[x, z]))))
        counts[triple] += 1
    return tuple(sorted(counts[t] for t in combinations(range(n - 1), 3)))


def check_tricolour_calibration(class_count: int, catalogue_size: int) -> None:
    """
    在完整的 K16 目录上核对三色向量的定义

    Raises:
        CalibrationError: 类数与已发表的 2320 不符
    """
    if catalogue_size == K16_CATALOGUE_SIZE and class_count != TRICOLOUR_K16_CLASSES:
        raise CalibrationError(
            f"三色向量在 {catalogue_size} 个 K16 P1F 上给出 {class_count} 个类，"
            f"已发表的结果为 {TRICOLOUR_K16_CLASSES}"
        )


def _vertex_cycles(factorisation: Factorisation) -> List[RowCycle]:
    square = unipotent_square(factorisation)
    cycles = []
    for r in range(factorisation.n):
        for s in range(r + 1, factorisation.n):
            for cycle in row_cycles(square, r, s):
                # 列 {r, s} 上含主对角线元素的 2-圈
                if cycle.length == 2 and set(cycle.columns) == {r, s}:
                    continue
                cycles.append(cycle)
    return cycles


def vertex_cycle_tally(factorisation: Factorisation) -> Dict[int, int]:
    """
    顶点圈计数：U(F) 全部行对的行圈按长度计数，不含对角线上的 2-圈

    Returns:
        Dict[int, int]: 长度 -> 个数（按长度升序）
    """
    tally = Counter(cycle.length for cycle in _vertex_cycles(factorisation))
    return dict(sorted(tally.items()))


def per_row_cycle_profile(factorisation: Factorisation, lengths: Iterable[int] = (3, 4)) -> List[Tuple[int, ...]]:
    """
    逐行圈剖面：每行参与的各长度行圈个数，n 个向量按字典序排序

    Args:
        factorisation: 1-因子分解
        lengths: 统计的圈长

    Returns:
        List[Tuple[int, ...]]: 排序后的 n 个向量
    """
    lengths = sorted(set(lengths))
    slot = {length: k for k, length in enumerate(lengths)}
    profile = [[0] * len(lengths) for _ in range(factorisation.n)]
    for cycle in _vertex_cycles(factorisation):
        k = slot.get(cycle.length)
        if k is None:
            continue
        for row in cycle.rows:
            profile[row][k] += 1
    return sorted(tuple(row) for row in profile)


INVARIANT_KINDS = ("indegree", "pv", "pv4", "tricolour", "cycles", "profile3", "profile34", "train")

# pv4 类取 p 向量的前 PV4_MAX_I + 1 项
PV4_MAX_I = 4


@dataclass(frozen=True)
class InvariantReport:
    """一个 P1F 的全部不变量"""
    line: str
    indegree: Tuple[int, ...]
    p_vector: Tuple[int, ...]
    tricolour: Tuple[int, ...]
    cycle_tally: Tuple[Tuple[int, int], ...]
    profile3: Tuple[Tuple[int, ...], ...]
    profile34: Tuple[Tuple[int, ...], ...]
    train_hash: str

    def value(self, kind: str) -> Hashable:
        """按种类取不变量值（可作为分类键）"""
        values = {
            "indegree": self.indegree,
            "pv": self.p_vector,
            "pv4": self.p_vector[:PV4_MAX_I + 1],
            "tricolour": self.tricolour,
            "cycles": self.cycle_tally,
            "profile3": self.profile3,
            "profile34": self.profile34,
            "train": self.train_hash,
        }
        if kind not in values:
            raise ValueError(f"未知的不变量种类: {kind}")
        return values[kind]

    def to_dict(self) -> Dict:
        return {
            "line": self.line,
            "indegree": list(self.indegree),
            "p_vector": list(self.p_vector),
            "tricolour": list(self.tricolour),
            "cycle_tally": {str(k): v for k, v in self.cycle_tally},
            "profile3": [list(r) for r in self.profile3],
            "profile34": [list(r) for r in self.profile34],
            "train_hash": self.train_hash,
        }

    def format_line(self) -> str:
        """索引行：canonical_line<TAB>name=value ..."""
        fields = [
            "indegree=" + _join(self.indegree),
            "pv=" + _join(self.p_vector),
            "tricolour=" + _join(self.tricolour),
            "cycles=" + ",".join(f"{k}:{v}" for k, v in self.cycle_tally),
            "profile3=" + ";".join(_join(r) for r in self.profile3),
            "profile34=" + ";".join(_join(r) for r in self.profile34),
            "train=" + self.train_hash,
        ]
        return self.line + "\t" + "\t".join(fields)

    @classmethod
    def parse_line(cls, text: str) -> "InvariantReport":
        line, *fields = text.rstrip("\n").split("\t")
        values = dict(f.split("=", 1) for f in fields)
        ints = lambda s: tuple(int(x) for x in s.split(",") if x)
        return cls(
            line=line,
            indegree=ints(values["indegree"]),
            p_vector=ints(values["pv"]),
            tricolour=ints(values["tricolour"]),
            cycle_tally=tuple(tuple(int(x) for x in kv.split(":")) for kv in values["cycles"].split(",") if kv),
            profile3=tuple(ints(r) for r in values["profile3"].split(";")),
            profile34=tuple(ints(r) for r in values["profile34"].split(";")),
            train_hash=values["train"],
        )


def _join(values: Sequence[int]) -> str:
    return ",".join(str(v) for v in values)


def invariant_report(factorisation: Factorisation, line: str, max_i: int = 5) -> InvariantReport:
    """
    一次计算全部不变量

    Args:
        factorisation: P1F
        line: 该 P1F 的目录行（通常为规范行）
        max_i: p 向量的最大下标（不小于 PV4_MAX_I）

    Returns:
        InvariantReport: 不变量报告
    """
    if max_i < PV4_MAX_I:
        raise ValueError(f"max_i 不能小于 {PV4_MAX_I}：报告需要给出 pv4 类")
    train = build_train(factorisation)
    return InvariantReport(
        line=line,
        indegree=indegree_sequence(train).tallies,
        p_vector=p_vector(train, max_i).counts,
        tricolour=tricolour_vector(factorisation),
        cycle_tally=tuple(vertex_cycle_tally(factorisation).items()),
        profile3=tuple(per_row_cycle_profile(factorisation, (3,))),
        profile34=tuple(per_row_cycle_profile(factorisation, (3, 4))),
        train_hash=train_canonical_hash(train),
    )


@dataclass(frozen=True)
class ClassCount:
    """
    按某个不变量划分目录的结果

    Attributes:
        kind: 不变量种类
        classes: 等价类个数
        collisions: 类大小 -> 该大小的类个数（只含大小 >= 2）
    """
    kind: str
    classes: int
    collisions: Dict[int, int]

    def to_dict(self) -> Dict:
        return {"kind": self.kind, "classes": self.classes,
                "collisions": {str(k): v for k, v in sorted(self.collisions.items())}}


def class_counts(reports: Sequence[InvariantReport], kind: str,
                 key: Optional[Callable[[InvariantReport], Hashable]] = None) -> ClassCount:
    """
    按不变量统计等价类个数与碰撞规模

    Args:
        reports: 不变量报告
        kind: 不变量种类（见 INVARIANT_KINDS）
        key: 自定义取值函数，默认 InvariantReport.value(kind)

    Returns:
        ClassCount: 分类结果
    """
    key = key if key is not None else (lambda r: r.value(kind))
    sizes = Counter(Counter(key(r) for r in reports).values())
    collisions = {size: count for size, count in sizes.items() if size >= 2}
    return ClassCount(kind, sum(sizes.values()), collisions)
