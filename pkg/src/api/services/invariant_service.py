from typing import Any, Dict, Iterable, Optional

from src.api.services.base import service_result
from src.api.services.p1f_service import parse_entries
from src.config.settings import settings
from src.core.catalogue.line_codec import emit_line
from src.core.errors import P1FError
from src.core.factorisation import Factorisation
from src.core.invariants import (
    build_train,
    indegree_sequence,
    invariant_report,
    p_vector,
    per_row_cycle_profile,
    train_canonical_hash,
    tricolour_vector,
    vertex_cycle_tally,
)

KINDS = ("train", "indegree", "pv", "tricolour", "cycles", "profile", "all")


class InvariantService:
    """不变量计算服务"""

    def compute_one(self, factorisation: Factorisation, kind: str,
                    lengths: Iterable[int] = (3, 4), max_i: Optional[int] = None) -> Any:
        """
        计算单个 P1F 的一种不变量

        Args:
            factorisation: P1F
            kind: train | indegree | pv | tricolour | cycles | profile | all
            lengths: profile 统计的圈长
            max_i: p 向量的最大下标（默认取配置）

        Returns:
            Any: 可序列化为 JSON 的不变量值
        """
        max_i = settings.p_vector_max_i if max_i is None else max_i
        if kind == "train":
            train = build_train(factorisation)
            return {"hash": train_canonical_hash(train), "vertices": train.vertex_count,
                    "loops": int(len(train.loops))}
        if kind == "indegree":
            return indegree_sequence(build_train(factorisation)).as_list()
        if kind == "pv":
            return p_vector(build_train(factorisation), max_i).as_list()
        if kind == "tricolour":
            return list(tricolour_vector(factorisation))
        if kind == "cycles":
            return {str(k): v for k, v in vertex_cycle_tally(factorisation).items()}
        if kind == "profile":
            return [list(row) for row in per_row_cycle_profile(factorisation, lengths)]
        if kind == "all":
            return invariant_report(factorisation, emit_line(factorisation), max_i).to_dict()
        raise P1FError(f"未知的不变量种类: {kind}（可选 {', '.join(KINDS)}）")

    @service_result
    def compute(self, text: str, kind: str, lengths: Iterable[int] = (3, 4),
                max_i: Optional[int] = None) -> Dict[str, Any]:
        lengths = tuple(lengths)
        values = [
            {"line": emit_line(f), "value": self.compute_one(f, kind, lengths, max_i)}
            for f in parse_entries(text)
        ]
        return {"kind": kind, "records": values}
