"""
路由：P1F 计算接口与健康检查。
"""
