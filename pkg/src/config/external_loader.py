"""
外部配置加载器
从项目外部读取配置文件，实现配置与项目分离
"""
import importlib.util
import logging
import os
from pathlib import Path
from typing import Any, Dict, Optional

logger = logging.getLogger(__name__)

CONFIG_NAME = 'p1f_plugin.py'

# 外部配置文件允许覆盖的项，其余大写名字会被忽略
KNOWN_KEYS = frozenset({
    'THREADS', 'LOG_LEVEL', 'LOG_DIR', 'CATALOGUE_DIR', 'P_VECTOR_MAX_I',
    'API_HOST', 'API_PORT', 'DEBUG_MODE',
})


class ExternalConfigLoader:
    """外部配置加载器"""

    def __init__(self):
        self.config_cache: Optional[Dict[str, Any]] = None
        self.config_paths = [
            # 1. 环境变量指定的路径（优先级最高）
            os.environ.get('P1F_CONFIG_PATH', ''),
            # 2. 用户主目录
            str(Path.home()),
        ]

    def find_config_file(self, config_name: str = CONFIG_NAME) -> Optional[Path]:
        """
        查找配置文件

        Args:
            config_name: 配置文件名

        Returns:
            Path: 配置文件路径，如果未找到返回None
        """
        for path_str in self.config_paths:
            if not path_str:
                continue
            config_file = Path(path_str) / config_name
            if config_file.is_file():
                logger.debug(f"找到配置文件: {config_file}")
                return config_file
        return None

    def load_config(self, config_name: str = CONFIG_NAME) -> Dict[str, Any]:
        """
        加载外部配置文件

        Args:
            config_name: 配置文件名

        Returns:
            Dict[str, Any]: 配置字典
        """
        if self.config_cache is not None:
            return self.config_cache

        config_file = self.find_config_file(config_name)
        if not config_file:
            raise FileNotFoundError(f"找不到配置文件: {config_name}")

        try:
            spec = importlib.util.spec_from_file_location("p1f_external_config", config_file)
            if spec is None or spec.loader is None:
                raise ImportError(f"无法加载配置文件: {config_file}")
            config_module = importlib.util.module_from_spec(spec)
            spec.loader.exec_module(config_module)

            names = [n for n in dir(config_module) if n.isupper()]
            unknown = sorted(set(names) - KNOWN_KEYS)
            if unknown:
                logger.warning(f"忽略未知的配置项: {', '.join(unknown)}")
            config_dict = {name: getattr(config_module, name) for name in names if name in KNOWN_KEYS}
            logger.debug(f"从 {config_file} 加载 {len(config_dict)} 个配置项")
            self.config_cache = config_dict
            return config_dict
        except Exception as e:
            raise ImportError(f"加载配置文件失败 {config_file}: {e}")

    def reload_config(self, config_name: str = CONFIG_NAME) -> Dict[str, Any]:
        """重新加载配置文件"""
        self.config_cache = None
        return self.load_config(config_name)


# 全局配置加载器实例
config_loader = ExternalConfigLoader()


def load_external_config(config_name: str = CONFIG_NAME) -> Dict[str, Any]:
    """加载外部配置的便捷函数"""
    return config_loader.load_config(config_name)


def reload_external_config(config_name: str = CONFIG_NAME) -> Dict[str, Any]:
    """重新加载外部配置的便捷函数"""
    return config_loader.reload_config(config_name)
