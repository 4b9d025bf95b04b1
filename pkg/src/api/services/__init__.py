"""
服务层：校验、规范形、不变量、拉丁方、发展构造、搜索与目录导入。
"""
