"""
配置文件
从外部配置文件加载配置，如果加载失败则使用默认值
"""
import logging
import os

from .external_loader import load_external_config

logger = logging.getLogger(__name__)

# 默认配置值
# 并行 worker 数量上限（环境变量 P1F_THREADS 优先）
THREADS = os.cpu_count() or 1

# 日志配置
LOG_LEVEL = 'INFO'
LOG_DIR = 'logs'

# 目录存储
CATALOGUE_DIR = 'catalogue'
CHECKPOINT_VERSION = 1

# 不变量
P_VECTOR_MAX_I = 5

# 服务器配置
API_HOST = '0.0.0.0'
API_PORT = 9020
DEBUG_MODE = False

# 尝试加载外部配置，覆盖上面的默认值
try:
    external_config = load_external_config()
    globals().update(external_config)
    logger.debug("使用外部配置文件")
except FileNotFoundError:
    logger.debug("未找到外部配置文件，使用默认值")
except ImportError as e:
    logger.warning(f"无法加载外部配置，使用默认值: {e}")
