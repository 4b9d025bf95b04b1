"""
顶点重标号（置换）
perm[v] 为旧顶点 v 的新标号
"""

from collections import Counter
from dataclasses import dataclass
from math import lcm
from typing import List, Sequence, Tuple

from src.core.errors import FactorError
from src.core.factorisation import Factorisation, vertex_name

CycleType = Tuple[Tuple[int, int], ...]


@dataclass(frozen=True)
class Relabelling:
    """顶点集合上的双射"""
    perm: Tuple[int, ...]

    def __post_init__(self):
        perm = tuple(int(x) for x in self.perm)
        if sorted(perm) != list(range(len(perm))):
            raise FactorError(f"不是置换: {perm}")
        object.__setattr__(self, "perm", perm)

    @classmethod
    def identity(cls, n: int) -> "Relabelling":
        return cls(tuple(range(n)))

    @property
    def n(self) -> int:
        return len(self.perm)

    def __getitem__(self, v: int) -> int:
        return self.perm[v]

    def compose(self, other: "Relabelling") -> "Relabelling":
        """self ∘ other：先作用 other，再作用 self"""
        return Relabelling(tuple(self.perm[x] for x in other.perm))

    def inverse(self) -> "Relabelling":
        inv = [0] * self.n
        for v, x in enumerate(self.perm):
            inv[x] = v
        return Relabelling(tuple(inv))

    def power(self, k: int) -> "Relabelling":
        result = Relabelling.identity(self.n)
        for _ in range(k % self.order if self.order else 0):
            result = self.compose(result)
        return result

    def apply(self, factorisation: Factorisation) -> Factorisation:
        return factorisation.relabel(self.perm)

    def cycles(self) -> List[Tuple[int, ...]]:
        seen = [False] * self.n
        cycles = []
        for start in range(self.n):
            if seen[start]:
                continue
            cycle = []
            v = start
            while not seen[v]:
                seen[v] = True
                cycle.append(v)
                v = self.perm[v]
            cycles.append(tuple(cycle))
        return cycles

    @property
    def cycle_type(self) -> CycleType:
        counts = Counter(len(c) for c in self.cycles())
        return tuple(sorted(counts.items(), reverse=True))

    @property
    def order(self) -> int:
        return lcm(*(len(c) for c in self.cycles()))

    @property
    def is_identity(self) -> bool:
        return self.perm == tuple(range(self.n))

    def fixes(self, factorisation: Factorisation) -> bool:
        return self.apply(factorisation) == factorisation

    def to_cycle_notation(self) -> str:
        """非平凡轮换的记号，例如 (abcdefg)(hijklmn)"""
        parts = []
        for cycle in self.cycles():
            if len(cycle) > 1:
                sep = "" if self.n <= 26 else " "
                parts.append("(" + sep.join(vertex_name(v, self.n) for v in cycle) + ")")
        return "".join(parts) or "()"


def format_cycle_type(cycle_type: CycleType) -> str:
    """轮换型的文本形式，例如 7^2 1^2"""
    return " ".join(f"{length}^{count}" for length, count in cycle_type)


def relabel(factorisation: Factorisation, perm: Sequence[int]) -> Factorisation:
    return factorisation.relabel(perm)
