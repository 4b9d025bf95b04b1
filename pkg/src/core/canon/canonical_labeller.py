"""
P1F 的规范标号、同构判定与自同构群

规范形：包含固定因子 F1、F2，且在满足该条件的所有重标号中目录行字典序最小。
对每个有序因子对 (F, G) 与 F ∪ G 这个 Hamilton 圈的 n 种对齐方式逐一重标号，
共 (n-1)(n-2)·n 种候选。

目录行中第 k 个 token 恰好是包含边 a-(第 k 个字母) 的因子，因此候选之间可以
逐个 token 比较，第一次出现更大的 token 即可剪枝。
"""

from dataclasses import dataclass, field
from typing import Iterator, List, Optional, Sequence, Tuple

from sympy.combinatorics import Permutation, PermutationGroup

from src.core.canon.relabelling import CycleType, Relabelling, format_cycle_type
from src.core.catalogue.line_codec import emit_line
from src.core.errors import NotPerfectError
from src.core.factorisation import Factorisation, OneFactor, validate_p1f
from src.utils.logging import get_logger

logger = get_logger(__name__)

Key = Tuple[int, ...]


def cycle_alignments(f: Sequence[int], g: Sequence[int]) -> Iterator[Tuple[List[int], List[int]]]:
    """
    把 Hamilton 圈 F ∪ G 映射到固定圈 a-b-c-...，并使 F 的边落在 F1 的位置

    Args:
        f: 因子 F 的 partner 数组
        g: 因子 G 的 partner 数组

    Returns:
        Iterator[(label, inverse)]: n 种对齐；label 为旧 -> 新，inverse 为新 -> 旧
    """
    n = len(f)
    seq = [0] * n
    v = 0
    for k in range(0, n, 2):
        seq[k] = v
        u = f[v]
        seq[k + 1] = u
        v = g[u]
    for t in range(0, n, 2):
        for step, origin in ((1, t), (-1, t + 1)):
            inverse = [seq[(origin + step * k) % n] for k in range(n)]
            label = [0] * n
            for k, old in enumerate(inverse):
                label[old] = k
            yield label, inverse


def relabelled_key(partner: Sequence[int], label: Sequence[int], inverse: Sequence[int]) -> Key:
    """重标号后因子的排序键（与 token 字典序一致）"""
    key = []
    for x in range(len(partner)):
        y = label[partner[inverse[x]]]
        if x < y:
            key.append(x)
            key.append(y)
    return tuple(key)


@dataclass
class CanonicalResult:
    """规范化结果：规范形、规范化映射以及达到最小行的全部映射"""
    factorisation: Factorisation
    relabelling: Relabelling
    minimal_labellings: List[Relabelling] = field(default_factory=list)
    candidates: int = 0

    def automorphisms(self) -> List[Relabelling]:
        back = self.relabelling.inverse()
        return [back.compose(tau) for tau in self.minimal_labellings]


class CanonicalLabeller:
    """对一个 P1F 执行规范化搜索"""

    def __init__(self, factorisation: Factorisation):
        self.factorisation = factorisation
        self.n = factorisation.n
        self.partners = [f.partner for f in factorisation.factors]
        self.owner = factorisation.owner.tolist()

    def _token_keys(self, label: List[int], inverse: List[int], best: Optional[List[Key]]) -> Tuple[int, Optional[List[Key]]]:
        """
        与当前最优比较

        Returns:
            (比较结果 -1/0/1, 若更小则为完整的键列表)
        """
        n = self.n
        a = inverse[0]
        row = self.owner[a]
        keys: List[Key] = []
        state = 0 if best is not None else -1
        for k in range(1, n):
            key = relabelled_key(self.partners[row[inverse[k]]], label, inverse)
            if state == 0:
                if key > best[k - 1]:
                    return 1, None
                if key < best[k - 1]:
                    state = -1
            keys.append(key)
        return state, (keys if state < 0 else None)

    def run(self) -> CanonicalResult:
        best: Optional[List[Key]] = None
        minimal: List[List[int]] = []
        candidates = 0
        count = len(self.partners)
        for i in range(count):
            for j in range(count):
                if i == j:
                    continue
                for label, inverse in cycle_alignments(self.partners[i], self.partners[j]):
                    candidates += 1
                    state, keys = self._token_keys(label, inverse, best)
                    if state < 0:
                        best = keys
                        minimal = [label]
                    elif state == 0:
                        minimal.append(label)
        factors = tuple(OneFactor.from_edges(self.n, zip(key[0::2], key[1::2])) for key in best)
        relabellings = [Relabelling(tuple(label)) for label in minimal]
        return CanonicalResult(
            factorisation=Factorisation(self.n, factors),
            relabelling=relabellings[0],
            minimal_labellings=relabellings,
            candidates=candidates,
        )


def canonicalize(factorisation: Factorisation, check: bool = True) -> CanonicalResult:
    """
    规范化（同时收集自同构）

    Args:
        factorisation: P1F
        check: 是否先校验 P1F

    Returns:
        CanonicalResult: 规范化结果
    """
    if check and not validate_p1f(factorisation).is_perfect:
        raise NotPerfectError("规范形只对完美1-因子分解有定义")
    return CanonicalLabeller(factorisation).run()


def canonical_form(factorisation: Factorisation) -> Tuple[Factorisation, Relabelling]:
    """返回 (规范形, 规范化映射)；同一最小行的多个映射中取枚举顺序的第一个"""
    result = canonicalize(factorisation)
    return result.factorisation, result.relabelling


def canonical_line(factorisation: Factorisation) -> str:
    """规范形的目录行"""
    return emit_line(canonicalize(factorisation).factorisation)


def are_isomorphic(a: Factorisation, b: Factorisation) -> bool:
    """两个 P1F 是否同构；阶数不同时返回 False"""
    if a.n != b.n:
        return False
    return canonicalize(a).factorisation == canonicalize(b).factorisation


@dataclass(frozen=True)
class AutGroup:
    """
    P1F 的自同构群

    Attributes:
        order: 群阶
        generators: 生成元
        generator_cycle_type: 群为循环群时生成元的轮换型
        elements: 全部群元素
        is_cyclic: 是否为循环群
        vertex_orbits: 群在顶点集上的轨道（由 sympy 计算）
    """
    order: int
    generators: Tuple[Relabelling, ...]
    generator_cycle_type: Optional[CycleType]
    elements: Tuple[Relabelling, ...]
    is_cyclic: bool
    vertex_orbits: Tuple[Tuple[int, ...], ...] = ()

    def orbits(self) -> List[Tuple[int, ...]]:
        return list(self.vertex_orbits)

    @property
    def cycle_type_text(self) -> str:
        if self.generator_cycle_type is None:
            return "non-cyclic"
        return format_cycle_type(self.generator_cycle_type)


def _to_sympy(relabelling: Relabelling) -> Permutation:
    return Permutation(list(relabelling.perm))


def build_aut_group(elements: Sequence[Relabelling]) -> AutGroup:
    """由全部群元素构造 AutGroup，并用 sympy 校验群阶"""
    elements = tuple(sorted(elements, key=lambda e: e.perm))
    group = PermutationGroup([_to_sympy(e) for e in elements])
    if group.order() != len(elements):
        raise AssertionError(f"自同构集合不封闭: {group.order()} != {len(elements)}")
    cyclic = bool(group.is_cyclic)
    order = len(elements)
    if cyclic:
        generator = next(e for e in elements if e.order == order)
        generators = (generator,)
        cycle_type = generator.cycle_type
    else:
        chosen: List[Relabelling] = []
        span = PermutationGroup([_to_sympy(elements[0])])
        for e in sorted(elements, key=lambda e: -e.order):
            if not span.contains(_to_sympy(e)):
                chosen.append(e)
                span = PermutationGroup([_to_sympy(g) for g in chosen])
        generators = tuple(chosen)
        cycle_type = None
    vertex_orbits = tuple(sorted(tuple(sorted(int(v) for v in orbit)) for orbit in group.orbits()))
    return AutGroup(order, generators, cycle_type, elements, cyclic, vertex_orbits)


def automorphism_group(factorisation: Factorisation) -> AutGroup:
    """
    计算 P1F 的完整自同构群（规范化过程中达到最小行的映射即为陪集）
    """
    result = canonicalize(factorisation)
    group = build_aut_group(result.automorphisms())
    logger.debug(f"自同构群阶 {group.order}，轮换型 {group.cycle_type_text}")
    return group
