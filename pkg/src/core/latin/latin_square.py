"""
拉丁方、行圈与共轭

行、列下标从 0 开始，符号取值 1..m。
列圈与符号圈通过共轭转化为行圈，只需一个行圈核心。
"""

from dataclasses import dataclass
from functools import cached_property
from typing import Dict, List, Sequence, Tuple, Union

import numpy as np

from src.core.errors import LatinSquareError

# 坐标置换的字母记号：r=行, c=列, s=符号
_COORDS = "rcs"

CoordPerm = Union[str, Sequence[int]]


@dataclass(frozen=True)
class LatinSquare:
    """
    拉丁方

    Attributes:
        cells: m x m 的符号矩阵，符号取值 1..m
    """
    cells: Tuple[Tuple[int, ...], ...]

    def __post_init__(self):
        cells = tuple(tuple(int(x) for x in row) for row in self.cells)
        m = len(cells)
        if m == 0:
            raise LatinSquareError("拉丁方不能为空")
        symbols = set(range(1, m + 1))
        for i, row in enumerate(cells):
            if len(row) != m:
                raise LatinSquareError(f"第 {i} 行长度为 {len(row)}，应为 {m}")
            if set(row) != symbols:
                raise LatinSquareError(f"第 {i} 行不是 1..{m} 的排列")
        for j in range(m):
            if {row[j] for row in cells} != symbols:
                raise LatinSquareError(f"第 {j} 列不是 1..{m} 的排列")
        object.__setattr__(self, "cells", cells)

    @classmethod
    def from_array(cls, array) -> "LatinSquare":
        return cls(tuple(tuple(int(x) for x in row) for row in np.asarray(array)))

    @property
    def order(self) -> int:
        return len(self.cells)

    @cached_property
    def array(self) -> np.ndarray:
        array = np.array(self.cells, dtype=np.int32)
        array.setflags(write=False)
        return array

    @cached_property
    def positions(self) -> np.ndarray:
        """positions[r, k-1] 为符号 k 在第 r 行中的列"""
        m = self.order
        pos = np.empty((m, m), dtype=np.int32)
        rows = np.repeat(np.arange(m), m)
        pos[rows, self.array.ravel() - 1] = np.tile(np.arange(m), m)
        pos.setflags(write=False)
        return pos

    def is_symmetric(self) -> bool:
        return bool((self.array == self.array.T).all())

    def is_idempotent(self) -> bool:
        return bool((np.diag(self.array) == np.arange(1, self.order + 1)).all())

    def is_unipotent(self) -> bool:
        return len(set(np.diag(self.array).tolist())) == 1

    def triples(self) -> List[Tuple[int, int, int]]:
        """(行, 列, 符号) 三元组，均为 1 起始"""
        m = self.order
        return [(i + 1, j + 1, self.cells[i][j]) for i in range(m) for j in range(m)]


@dataclass(frozen=True)
class RowCycle:
    """
    两行之间的行圈：行 r、s 在 columns 上构成极小的 2 x ℓ 拉丁子矩形

    Attributes:
        rows: (r, s)
        columns: 列的圈序，从最小列开始
        symbols: 这些列上出现的符号（升序）
    """
    rows: Tuple[int, int]
    columns: Tuple[int, ...]
    symbols: Tuple[int, ...]

    @property
    def length(self) -> int:
        return len(self.columns)


def _row_permutation(square: LatinSquare, r: int, s: int) -> np.ndarray:
    # 列 c 映射到第 r 行中出现 L[s][c] 的列
    return square.positions[r, square.array[s] - 1]


def _cycle_lengths(perm: np.ndarray) -> List[int]:
    seen = np.zeros(len(perm), dtype=bool)
    lengths = []
    for start in range(len(perm)):
        if seen[start]:
            continue
        length = 0
        c = start
        while not seen[c]:
            seen[c] = True
            c = perm[c]
            length += 1
        lengths.append(length)
    return lengths


def _check_rows(square: LatinSquare, r: int, s: int) -> None:
    m = square.order
    if not (0 <= r < m and 0 <= s < m):
        raise LatinSquareError(f"行下标 ({r}, {s}) 超出范围 [0, {m})")
    if r == s:
        raise LatinSquareError("行圈需要两个不同的行")


def row_cycles(square: LatinSquare, r: int, s: int) -> List[RowCycle]:
    """
    行 r 与行 s 之间的全部行圈

    Args:
        square: 拉丁方
        r: 行下标
        s: 另一个行下标

    Returns:
        List[RowCycle]: 按首列升序，长度之和为 m
    """
    _check_rows(square, r, s)
    perm = _row_permutation(square, r, s)
    seen = np.zeros(square.order, dtype=bool)
    cycles = []
    for start in range(square.order):
        if seen[start]:
            continue
        columns = []
        c = start
        while not seen[c]:
            seen[c] = True
            columns.append(c)
            c = int(perm[c])
        symbols = tuple(sorted(square.cells[r][c] for c in columns))
        cycles.append(RowCycle((r, s), tuple(columns), symbols))
    return cycles


def row_cycle_lengths(square: LatinSquare, r: int, s: int) -> List[int]:
    _check_rows(square, r, s)
    return sorted(_cycle_lengths(_row_permutation(square, r, s)))


def _parse_coord_perm(coord_perm: CoordPerm) -> Tuple[int, int, int]:
    if isinstance(coord_perm, str):
        text = coord_perm.strip().lower()
        if len(text) != 3 or set(text) != set(_COORDS):
            raise LatinSquareError(f"无法识别的坐标置换: {coord_perm!r}")
        perm = tuple(_COORDS.index(ch) for ch in text)
    else:
        perm = tuple(int(x) for x in coord_perm)
    if sorted(perm) != [0, 1, 2]:
        raise LatinSquareError(f"坐标置换必须是 (0, 1, 2) 的排列: {coord_perm!r}")
    return perm


def conjugate(square: LatinSquare, coord_perm: CoordPerm) -> LatinSquare:
    """
    共轭：对全部三元组统一置换坐标

    Args:
        square: 拉丁方
        coord_perm: 新三元组取旧三元组的哪些坐标，如 (2, 1, 0) 或 "scr"
            表示新的行 = 旧的符号、新的列 = 旧的列、新的符号 = 旧的行

    Returns:
        LatinSquare: 共轭拉丁方
    """
    perm = _parse_coord_perm(coord_perm)
    m = square.order
    cells = np.zeros((m, m), dtype=np.int32)
    for triple in square.triples():
        i, j, k = (triple[p] for p in perm)
        cells[i - 1, j - 1] = k
    return LatinSquare.from_array(cells)


def column_cycles(square: LatinSquare, a: int, b: int) -> List[RowCycle]:
    """列 a、b 之间的列圈（转置后的行圈）"""
    return row_cycles(conjugate(square, (1, 0, 2)), a, b)


def symbol_cycles(square: LatinSquare, a: int, b: int) -> List[RowCycle]:
    """符号 a、b（取值 1..m）之间的符号圈（行与符号互换后的行圈）"""
    return row_cycles(conjugate(square, (2, 1, 0)), a - 1, b - 1)


def hamiltonian_row_pairs(square: LatinSquare) -> List[Tuple[int, int]]:
    """行圈为单个长度 m 的圈的行对"""
    m = square.order
    pairs = []
    for r in range(m):
        for s in range(r + 1, m):
            if len(_cycle_lengths(_row_permutation(square, r, s))) == 1:
                pairs.append((r, s))
    return pairs


def is_row_hamiltonian(square: LatinSquare) -> bool:
    m = square.order
    for r in range(m):
        for s in range(r + 1, m):
            if len(_cycle_lengths(_row_permutation(square, r, s))) != 1:
                return False
    return True


@dataclass(frozen=True)
class LatinClassification:
    """拉丁方的 Hamilton 性与原子性"""
    row_hamiltonian: bool
    column_hamiltonian: bool
    symbol_hamiltonian: bool

    @property
    def atomic(self) -> bool:
        return self.row_hamiltonian and self.column_hamiltonian and self.symbol_hamiltonian

    def to_dict(self) -> Dict[str, bool]:
        return {
            "row_hamiltonian": self.row_hamiltonian,
            "column_hamiltonian": self.column_hamiltonian,
            "symbol_hamiltonian": self.symbol_hamiltonian,
            "atomic": self.atomic,
        }


def classify(square: LatinSquare) -> LatinClassification:
    """行/列/符号 Hamilton 性以及原子性"""
    row = is_row_hamiltonian(square)
    if square.is_symmetric():
        column = row
    else:
        column = is_row_hamiltonian(conjugate(square, (1, 0, 2)))
    symbol = is_row_hamiltonian(conjugate(square, (2, 1, 0)))
    return LatinClassification(row, column, symbol)


def square_automorphism_check(square: LatinSquare, perm: Sequence[int]) -> bool:
    """
    把同一个置换同时作用于行、列和符号后拉丁方是否不变

    Args:
        square: 拉丁方
        perm: 0 起始的置换，符号 k 映射为 perm[k-1] + 1

    Returns:
        bool: 是否为自同构
    """
    m = square.order
    if sorted(perm) != list(range(m)):
        raise LatinSquareError(f"不是 {m} 个点上的置换: {list(perm)}")
    p = np.asarray(perm, dtype=np.int32)
    image = np.empty_like(square.array)
    image[np.ix_(p, p)] = p[square.array - 1] + 1
    return bool((image == square.array).all())


def parse_square(text: str) -> LatinSquare:
    """
    解析拉丁方文本：m 行，每行 m 个空白分隔的整数；忽略空行与 # 注释
    """
    rows = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        try:
            rows.append(tuple(int(x) for x in line.split()))
        except ValueError:
            raise LatinSquareError(f"第 {lineno} 行含有非整数")
    return LatinSquare(tuple(rows))


def format_square(square: LatinSquare) -> str:
    width = len(str(square.order))
    return "\n".join(" ".join(f"{x:>{width}}" for x in row) for row in square.cells)
