from typing import Any, Dict, List, Optional

from src.api.services.base import service_result
from src.api.services.p1f_service import parse_entries
from src.core.latin import classify, fold, fold_report, format_square, hamiltonian_row_pairs, parse_square


class LatinService:
    """拉丁方相关服务"""

    @service_result
    def folds(self, text: str, vertices: Optional[List[int]] = None, check: bool = True) -> Dict[str, Any]:
        """
        折叠文本中的每个 P1F

        Args:
            text: 目录行
            vertices: 折叠的顶点（默认全部）
            check: 是否分类（Hamilton 性与原子性）

        Returns:
            Dict[str, Any]: 单个折叠时给出拉丁方文本；check 时给出汇总
        """
        records = []
        for factorisation in parse_entries(text):
            chosen = list(range(factorisation.n)) if vertices is None else vertices
            record: Dict[str, Any] = {}
            if len(chosen) == 1:
                record["square"] = format_square(fold(factorisation, chosen[0]))
            if check:
                report = fold_report(factorisation, chosen)
                record.update(report.to_dict())
                record["summary"] = report.summary()
            records.append(record)
        return {"records": records}

    @service_result
    def square(self, text: str) -> Dict[str, Any]:
        """分类一个拉丁方"""
        square = parse_square(text)
        pairs = hamiltonian_row_pairs(square)
        m = square.order
        return {
            "order": m,
            "symmetric": square.is_symmetric(),
            "idempotent": square.is_idempotent(),
            "hamiltonian_row_pairs": len(pairs),
            "row_pairs": m * (m - 1) // 2,
            **classify(square).to_dict(),
        }
