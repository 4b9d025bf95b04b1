"""
P1F Toolkit - 完全图完美1-因子分解 (P1F) 的枚举、规范化、不变量计算与拉丁方分析。
"""

__version__ = "1.0.0"
