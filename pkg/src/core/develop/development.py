"""
在置换群下发展基因子构造1-因子分解

结果的因子集合为 {σ^i·B : B 为基因子, 0 <= i < d} ∪ 不变因子，d 为生成置换的阶。

规格文件格式：
    perm: (abcdefg)(hijklmn)
    base:
      {ab, cg, ...}
      acbkdjei...
    fixed:
      {ah, bi, ...}
以 # 开头的行为注释。
"""

import re
from dataclasses import dataclass, field
from pathlib import Path
from typing import Dict, List, Optional, Tuple, Union

from src.core.canon import Relabelling
from src.core.catalogue.line_codec import parse_factor
from src.core.errors import DevelopmentError, DevelopmentSpecError, PermutationParseError
from src.core.factorisation import Factorisation, OneFactor, check_order, edge_count, edge_index, vertex_name
from src.core.factorisation.edges import LETTERS
from src.utils.logging import get_logger

logger = get_logger(__name__)

_CYCLE = re.compile(r"\(([^()]*)\)")


def parse_permutation(text: str, n: int) -> Relabelling:
    """
    解析轮换记号，如 "(abcdefg)(hijklmn)"；n > 26 时用逗号分隔数字，如 "(0,1,2)(5,6)"

    Args:
        text: 轮换记号，空串表示恒等置换
        n: 阶数

    Returns:
        Relabelling: 未出现的点保持不动
    """
    check_order(n)
    text = text.strip()
    perm = list(range(n))
    if not text or text == "()":
        return Relabelling(tuple(perm))
    if _CYCLE.sub("", text).strip():
        raise PermutationParseError(f"无法解析的轮换记号: {text!r}")
    seen = set()
    for body in _CYCLE.findall(text):
        body = body.replace(" ", "")
        if "," in body or body.isdigit():
            labels = body.split(",")
            try:
                points = [int(x) for x in labels]
            except ValueError:
                raise PermutationParseError(f"无法解析的轮换: ({body})")
        else:
            labels = list(body)
            points = [LETTERS.find(ch) for ch in labels]
        for label, v in zip(labels, points):
            if not 0 <= v < n:
                raise PermutationParseError(f"点 {label!r} 超出前 {n} 个顶点")
            if v in seen:
                raise PermutationParseError(f"点 {label!r} 重复出现")
            seen.add(v)
        for k, v in enumerate(points):
            perm[v] = points[(k + 1) % len(points)]
    return Relabelling(tuple(perm))


@dataclass(frozen=True)
class DevelopmentSpec:
    """
    发展规格

    Attributes:
        n: 阶数
        generator: 生成置换
        base_factors: 基因子
        fixed_factors: 在生成置换下不变的因子
    """
    n: int
    generator: Relabelling
    base_factors: Tuple[OneFactor, ...]
    fixed_factors: Tuple[OneFactor, ...] = ()

    def __post_init__(self):
        check_order(self.n)
        if self.generator.n != self.n:
            raise DevelopmentSpecError(f"置换作用于 {self.generator.n} 个点，阶数为 {self.n}")
        for f in self.base_factors + self.fixed_factors:
            if f.n != self.n:
                raise DevelopmentSpecError(f"因子 {f.describe()} 的阶数与 n={self.n} 不一致")
        d = self.generator.order
        total = len(self.base_factors) * d + len(self.fixed_factors)
        if total != self.n - 1:
            raise DevelopmentSpecError(
                f"|base|·d + |fixed| = {len(self.base_factors)}·{d} + {len(self.fixed_factors)} = {total}，应为 {self.n - 1}"
            )
        for f in self.fixed_factors:
            if f.relabel(self.generator.perm) != f:
                raise DevelopmentSpecError(f"不变因子 {f.describe()} 在 {self.generator.to_cycle_notation()} 下不是不变的")

    def to_dict(self) -> Dict:
        return {
            "n": self.n,
            "perm": self.generator.to_cycle_notation(),
            "base": [f.describe() for f in self.base_factors],
            "fixed": [f.describe() for f in self.fixed_factors],
        }


def develop(spec: DevelopmentSpec) -> Factorisation:
    """
    发展基因子

    Args:
        spec: 发展规格

    Returns:
        Factorisation: 发展得到的1-因子分解

    Raises:
        DevelopmentError: 像重复，或某条边被覆盖 0 次或多次
    """
    n = spec.n
    d = spec.generator.order
    factors: List[OneFactor] = []
    for base in spec.base_factors:
        image = base
        for _ in range(d):
            factors.append(image)
            image = image.relabel(spec.generator.perm)
    factors.extend(spec.fixed_factors)

    seen: Dict[Tuple[int, ...], int] = {}
    for k, f in enumerate(factors):
        if f.partner in seen:
            raise DevelopmentError(f"第 {seen[f.partner]} 与第 {k} 个因子相同: {f.describe()}", multiplicity=2)
        seen[f.partner] = k

    cover = [0] * edge_count(n)
    for f in factors:
        for eid in f.edge_ids():
            cover[eid] += 1
    index = edge_index(n)
    for eid, times in enumerate(cover):
        if times != 1:
            lo, hi = index.endpoints(eid)
            name = vertex_name(lo, n) + vertex_name(hi, n)
            raise DevelopmentError(f"边 {name} 被覆盖 {times} 次，发展结果不是边集的划分",
                                   witness=(lo, hi), multiplicity=times)
    logger.debug(f"发展得到 {len(factors)} 个因子（d={d}）")
    return Factorisation(n, tuple(factors))


def parse_spec(text: str, n: Optional[int] = None) -> DevelopmentSpec:
    """
    解析发展规格文本

    Args:
        text: 规格文本
        n: 阶数；缺省时由第一个因子推断

    Returns:
        DevelopmentSpec: 发展规格
    """
    sections: Dict[str, List[str]] = {"perm": [], "base": [], "fixed": []}
    current: Optional[str] = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        match = re.match(r"^(perm|base|fixed)\s*:(.*)$", line)
        if match:
            current = match.group(1)
            line = match.group(2).strip()
            if not line:
                continue
        if current is None:
            raise DevelopmentSpecError(f"第 {lineno} 行不在任何段落中: {raw!r}")
        sections[current].append(line)
    if not sections["perm"] and not sections["base"]:
        raise DevelopmentSpecError("规格缺少 perm: 或 base: 段落")

    items = {name: _split_factors(" ".join(lines)) for name, lines in sections.items() if name != "perm"}
    if n is None:
        first = (items["base"] + items["fixed"])[:1]
        if not first:
            raise DevelopmentSpecError("规格中没有任何因子")
        n = _infer_order(first[0])
    generator = parse_permutation(" ".join(sections["perm"]), n)
    return DevelopmentSpec(
        n=n,
        generator=generator,
        base_factors=tuple(parse_factor(t, n) for t in items["base"]),
        fixed_factors=tuple(parse_factor(t, n) for t in items["fixed"]),
    )


def _split_factors(text: str) -> List[str]:
    """把段落拆成因子：{...} 边列表或空白分隔的压缩 token"""
    factors = re.findall(r"\{[^{}]*\}", text)
    rest = re.sub(r"\{[^{}]*\}", " ", text)
    return factors + rest.split()


def _infer_order(item: str) -> int:
    if item.startswith("{"):
        names = [p for p in re.split(r"[\s,{}]+", item) if p]
        return 2 * len(names)
    if "-" in item:
        return 2 * len(item.split("."))
    return len(item)


def parse_spec_file(path: Union[str, Path], n: Optional[int] = None) -> DevelopmentSpec:
    with open(path, "r", encoding="utf-8") as f:
        return parse_spec(f.read(), n)
