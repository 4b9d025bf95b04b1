"""
领域异常定义
所有领域错误都继承自 P1FError（ValueError 的子类），服务层统一捕获
"""

from typing import Optional, Tuple


class P1FError(ValueError):
    """P1F 相关错误的基类"""


class InvalidOrderError(P1FError):
    """阶数不合法（奇数或小于4）"""

    def __init__(self, n: int):
        super().__init__(f"阶数不合法: n={n}（要求 n 为偶数且 n >= 4）")
        self.n = n


class FactorError(P1FError):
    """1-因子不合法、两个因子相同或阶数不一致"""


class NotPerfectError(P1FError):
    """输入不是完美1-因子分解"""


class LineParseError(P1FError):
    """目录行解析失败"""

    def __init__(self, message: str, token_index: Optional[int] = None, char_index: Optional[int] = None):
        where = ""
        if token_index is not None:
            where = f" (token {token_index}" + (f", char {char_index})" if char_index is not None else ")")
        super().__init__(f"{message}{where}")
        self.token_index = token_index
        self.char_index = char_index


class PermutationParseError(P1FError):
    """置换的轮换记号解析失败"""


class DevelopmentSpecError(P1FError):
    """发展规格不满足前置条件"""


class DevelopmentError(P1FError):
    """发展结果不是边集的划分"""

    def __init__(self, message: str, witness: Optional[Tuple[int, int]] = None, multiplicity: Optional[int] = None):
        super().__init__(message)
        self.witness = witness
        self.multiplicity = multiplicity


class CheckpointMismatchError(P1FError):
    """检查点文件与本次运行的参数不一致"""


class LatinSquareError(P1FError):
    """矩阵不是拉丁方"""


class CalibrationError(P1FError):
    """不变量定义与已发表的类数不符"""
