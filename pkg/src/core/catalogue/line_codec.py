"""
目录行编解码

格式：每个因子压缩为一个 token（省略空格与标点，字符 2i、2i+1 构成一条边，
边内较小字母在前，各边按首字母升序），token 之间以空白分隔并按升序排列。
n > 26 时使用数字方言：`0-1.2-3.4-5`；n <= 26 的目录行不接受数字方言。
"""

import re
from typing import List, Optional

from src.core.errors import InvalidOrderError, LineParseError
from src.core.factorisation import Factorisation, OneFactor, check_order
from src.core.factorisation.edges import LETTERS

_NUMERIC_EDGE = re.compile(r"^(\d+)-(\d+)$")


def factor_token(factor: OneFactor) -> str:
    """把1-因子编码为 token"""
    n = factor.n
    if n <= len(LETTERS):
        return "".join(LETTERS[u] + LETTERS[v] for u, v in factor.edge_pairs())
    return ".".join(f"{u}-{v}" for u, v in factor.edge_pairs())


def emit_line(factorisation: Factorisation) -> str:
    """把分解编码为单行目录文本（token 升序）"""
    return " ".join(factor_token(f) for f in factorisation.factors)


def _letter_pairs(token: str, n: int, token_index: Optional[int]) -> List[tuple]:
    if len(token) != n:
        raise LineParseError(f"token 长度应为 {n}，实际为 {len(token)}: {token!r}", token_index)
    seen = set()
    values = []
    for pos, ch in enumerate(token):
        v = LETTERS.find(ch)
        if v < 0 or v >= n:
            raise LineParseError(f"字母 {ch!r} 超出前 {n} 个小写字母", token_index, pos)
        if v in seen:
            raise LineParseError(f"token 中字母 {ch!r} 重复", token_index, pos)
        seen.add(v)
        values.append(v)
    return [(values[i], values[i + 1]) for i in range(0, n, 2)]


def _numeric_pairs(token: str, n: int, token_index: Optional[int]) -> List[tuple]:
    parts = token.split(".")
    if len(parts) != n // 2:
        raise LineParseError(f"数字 token 应包含 {n // 2} 条边，实际为 {len(parts)}", token_index)
    seen = set()
    pairs = []
    for pos, part in enumerate(parts):
        match = _NUMERIC_EDGE.match(part)
        if not match:
            raise LineParseError(f"无法解析的边 {part!r}", token_index, pos)
        u, v = int(match.group(1)), int(match.group(2))
        for x in (u, v):
            if x >= n:
                raise LineParseError(f"顶点 {x} 超出范围 [0, {n})", token_index, pos)
            if x in seen:
                raise LineParseError(f"token 中顶点 {x} 重复", token_index, pos)
            seen.add(x)
        pairs.append((u, v))
    return pairs


def parse_token(token: str, n: int, token_index: Optional[int] = None, strict: bool = True) -> OneFactor:
    """
    解析单个 token

    Args:
        token: 因子 token
        n: 阶数
        token_index: 在行中的位置（用于错误信息）
        strict: 是否要求规范书写（边内与边之间的升序，n <= 26 时只接受字母 token）

    Returns:
        OneFactor: 解析得到的1-因子
    """
    numeric = "-" in token
    if numeric and strict and n <= len(LETTERS):
        raise LineParseError(f"n = {n} 时目录行只接受字母 token: {token!r}", token_index)
    pairs = _numeric_pairs(token, n, token_index) if numeric else _letter_pairs(token, n, token_index)
    if strict:
        previous = -1
        for pos, (u, v) in enumerate(pairs):
            if u > v:
                raise LineParseError("边的端点未按升序书写", token_index, pos if numeric else 2 * pos)
            if u < previous:
                raise LineParseError("边未按首端点升序排列", token_index, pos if numeric else 2 * pos)
            previous = u
    return OneFactor.from_edges(n, pairs)


def parse_line(text: str) -> Factorisation:
    """
    解析一行目录文本（任意空白分隔 token，因此多行排版同样可解析）

    Args:
        text: 目录行

    Returns:
        Factorisation: 解析得到的分解
    """
    tokens = text.split()
    if not tokens:
        raise LineParseError("空行")
    n = len(tokens) + 1
    try:
        check_order(n)
    except InvalidOrderError:
        raise LineParseError(f"token 数量 {len(tokens)} 不对应合法的阶数")
    factors = [parse_token(tok, n, i) for i, tok in enumerate(tokens)]
    for i in range(1, len(factors)):
        if factors[i - 1].sort_key >= factors[i].sort_key:
            raise LineParseError("token 未严格按升序排列", i)
    return Factorisation(n, tuple(factors))


def parse_factor(text: str, n: int) -> OneFactor:
    """
    解析单个因子：压缩 token，或 `{ab, cg, ...}` 形式的边列表
    """
    text = text.strip()
    if text.startswith("{") or "," in text or " " in text:
        names = [part for part in re.split(r"[\s,{}]+", text) if part]
        pairs = []
        for pos, name in enumerate(names):
            match = _NUMERIC_EDGE.match(name)
            if match:
                u, v = int(match.group(1)), int(match.group(2))
                if max(u, v) >= n:
                    raise LineParseError(f"边 {name!r} 超出范围 [0, {n})", None, pos)
                pairs.append((u, v))
            else:
                if len(name) != 2:
                    raise LineParseError(f"无法解析的边 {name!r}", None, pos)
                u, v = LETTERS.find(name[0]), LETTERS.find(name[1])
                if min(u, v) < 0 or max(u, v) >= n:
                    raise LineParseError(f"边 {name!r} 超出前 {n} 个字母", None, pos)
                pairs.append((u, v))
        return OneFactor.from_edges(n, pairs)
    return parse_token(text, n, strict=False)
