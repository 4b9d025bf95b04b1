import os
from dataclasses import dataclass, field
from pathlib import Path

from dotenv import load_dotenv

from .config import (
    API_HOST,
    API_PORT,
    CATALOGUE_DIR,
    CHECKPOINT_VERSION,
    DEBUG_MODE,
    LOG_DIR,
    LOG_LEVEL,
    P_VECTOR_MAX_I,
    THREADS,
)

# 加载环境变量
load_dotenv()

LOG_LEVELS = ('DEBUG', 'INFO', 'WARNING', 'ERROR', 'CRITICAL')


def _env(name: str, default):
    """读取环境变量，按默认值的类型转换"""
    raw = os.environ.get(name)
    if raw is None or raw == '':
        return default
    if isinstance(default, bool):
        return raw.strip().lower() in ('1', 'true', 'yes', 'on')
    if isinstance(default, int):
        return int(raw)
    return raw


@dataclass
class Settings:
    """应用配置类"""
    # 项目根目录
    BASE_DIR: Path = Path(__file__).resolve().parent.parent.parent

    # 并行配置
    threads: int = field(default_factory=lambda: _env('P1F_THREADS', THREADS))

    # 日志配置
    log_level: str = field(default_factory=lambda: _env('P1F_LOG_LEVEL', LOG_LEVEL).upper())
    log_dir: str = field(default_factory=lambda: _env('P1F_LOG_DIR', LOG_DIR))

    # 目录存储与检查点
    catalogue_dir: str = field(default_factory=lambda: _env('P1F_CATALOGUE_DIR', CATALOGUE_DIR))
    checkpoint_version: int = CHECKPOINT_VERSION

    # 不变量
    p_vector_max_i: int = P_VECTOR_MAX_I

    # 服务器配置
    api_host: str = field(default_factory=lambda: _env('P1F_API_HOST', API_HOST))
    api_port: int = field(default_factory=lambda: _env('P1F_API_PORT', API_PORT))
    debug_mode: bool = field(default_factory=lambda: _env('P1F_DEBUG', DEBUG_MODE))

    def __post_init__(self):
        """初始化后的验证"""
        self._validate_config()

    def _validate_config(self):
        """验证配置"""
        if self.threads < 1:
            raise ValueError("P1F_THREADS 必须是正整数")

        if self.log_level not in LOG_LEVELS:
            raise ValueError(f"未知的日志级别: {self.log_level}")

        if self.api_port < 1 or self.api_port > 65535:
            raise ValueError("API端口必须在1-65535之间")

        if self.p_vector_max_i < 4:
            raise ValueError("P_VECTOR_MAX_I 不能小于 4（目录索引需要 pv4 类）")

    @property
    def is_debug(self) -> bool:
        """是否处于调试模式"""
        return self.debug_mode

    def get_log_path(self) -> Path:
        """日志目录（相对路径以项目根目录为基准）"""
        path = Path(self.log_dir)
        return path if path.is_absolute() else self.BASE_DIR / path

    def get_catalogue_path(self) -> Path:
        """目录存储路径"""
        path = Path(self.catalogue_dir)
        return path if path.is_absolute() else self.BASE_DIR / path


# 创建全局配置实例
settings = Settings()
