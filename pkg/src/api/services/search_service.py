from pathlib import Path
from typing import Any, Dict, Optional, Tuple

from src.api.services.base import service_result
from src.core.search import ResultFileSink, brute_force_classes, dedupe_result_file, enumerate_p1fs
from src.utils.logging import get_logger

logger = get_logger(__name__)


def parse_seed_range(text: Optional[str]) -> Optional[Tuple[int, int]]:
    """解析 "A..B" 形式的种子范围（闭区间）；单个数字表示只跑一个种子"""
    if not text:
        return None
    lo, sep, hi = text.partition("..")
    try:
        return (int(lo), int(hi)) if sep else (int(lo), int(lo))
    except ValueError:
        raise ValueError(f"无法解析的种子范围: {text!r}（格式 A..B）")


class SearchService:
    """枚举服务"""

    @service_result
    def enumerate(
        self,
        n: int,
        out: str,
        seeds: Optional[str] = None,
        checkpoint: Optional[str] = None,
        workers: Optional[int] = None,
        seed_order: str = "natural",
        shuffle_seed: int = 0,
        show_progress: bool = False,
    ) -> Dict[str, Any]:
        """
        枚举并把规范行追加到结果文件，最后去重

        Returns:
            Dict[str, Any]: 枚举汇总与去重信息
        """
        summary = enumerate_p1fs(
            n,
            seed_range=parse_seed_range(seeds),
            sink=ResultFileSink(out),
            checkpoint=checkpoint,
            workers=workers,
            seed_order=seed_order,
            shuffle_seed=shuffle_seed,
            show_progress=show_progress,
        )
        before, after = dedupe_result_file(out)
        data = summary.to_dict()
        data.update({"out": str(Path(out)), "lines": after, "duplicates_removed": before - after})
        return data

    @service_result
    def oracle(self, n: int, out: Optional[str] = None) -> Dict[str, Any]:
        """朴素枚举（小阶数核对用）"""
        lines = brute_force_classes(n)
        if out:
            with open(out, "w", encoding="utf-8") as f:
                f.writelines(line + "\n" for line in lines)
        return {"n": n, "classes": len(lines), "lines": lines if not out else None}
