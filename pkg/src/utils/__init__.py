"""
工具包
包含各种工具函数和类
"""
