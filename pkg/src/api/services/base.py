"""
服务层公共部分：统一的结果字典 {"success", "data", "error"}
"""

from functools import wraps
from typing import Any, Callable, Dict

from src.utils.logging import get_logger

logger = get_logger(__name__)

INTERNAL_ERROR = "internal"


def service_result(func: Callable[..., Any]) -> Callable[..., Dict[str, Any]]:
    """
    把领域函数的返回值或异常包装为结果字典

    领域错误（P1FError 及其他 ValueError）与缺失文件记为请求错误，其余异常记为内部错误。
    """
    @wraps(func)
    def wrapper(*args, **kwargs) -> Dict[str, Any]:
        try:
            return {"success": True, "data": func(*args, **kwargs), "error": None}
        except (ValueError, FileNotFoundError) as e:
            logger.warning(f"{func.__name__} 失败: {e}")
            return {"success": False, "data": None, "error": str(e), "error_type": type(e).__name__}
        except Exception as e:
            logger.error(f"{func.__name__} 出错: {e}", exc_info=True)
            return {"success": False, "data": None, "error": str(e), "error_type": INTERNAL_ERROR}

    return wrapper
