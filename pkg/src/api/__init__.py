"""
P1F 工具集的 API 包。
包含路由与服务层。
"""
