"""
种子级检查点

文本格式：
    n=<阶数> seeds=<种子总数> version=1
    <seed_index> <status> <count> <nodes>
"""

import os
import re
from dataclasses import dataclass
from pathlib import Path
from typing import Dict, Optional, Union

from src.core.errors import CheckpointMismatchError
from src.utils.logging import get_logger

logger = get_logger(__name__)

_HEADER = re.compile(r"^n=(\d+)\s+seeds=(\d+)\s+version=(\d+)$")
DONE = "done"


@dataclass(frozen=True)
class CheckpointRecord:
    seed_index: int
    status: str
    count: int
    nodes: int


class Checkpoint:
    """追加写入的检查点文件；种子要么已完成，要么尚未开始"""

    def __init__(self, path: Union[str, Path], n: int, seeds_total: int, version: int = 1):
        self.path = Path(path)
        self.n = n
        self.seeds_total = seeds_total
        self.version = version
        self.records: Dict[int, CheckpointRecord] = {}
        self._load()

    def _header(self) -> str:
        return f"n={self.n} seeds={self.seeds_total} version={self.version}"

    def _load(self) -> None:
        if not self.path.exists() or self.path.stat().st_size == 0:
            self.path.parent.mkdir(parents=True, exist_ok=True)
            with open(self.path, "w", encoding="utf-8") as f:
                f.write(self._header() + "\n")
            return
        with open(self.path, "r", encoding="utf-8") as f:
            lines = [line.strip() for line in f if line.strip()]
        match = _HEADER.match(lines[0]) if lines else None
        if not match:
            raise CheckpointMismatchError(f"检查点文件头无法识别: {self.path}")
        n, total, version = (int(g) for g in match.groups())
        if (n, total, version) != (self.n, self.seeds_total, self.version):
            raise CheckpointMismatchError(
                f"检查点与本次运行不一致: 文件为 n={n} seeds={total} version={version}，"
                f"本次为 n={self.n} seeds={self.seeds_total} version={self.version}"
            )
        for lineno, line in enumerate(lines[1:], start=2):
            parts = line.split()
            if len(parts) != 4:
                raise CheckpointMismatchError(f"检查点第 {lineno} 行格式错误: {line!r}")
            record = CheckpointRecord(int(parts[0]), parts[1], int(parts[2]), int(parts[3]))
            if not 0 <= record.seed_index < self.seeds_total:
                raise CheckpointMismatchError(f"检查点第 {lineno} 行种子编号越界: {record.seed_index}")
            self.records[record.seed_index] = record
        logger.info(f"从检查点恢复: {len(self.done_indices())} / {self.seeds_total} 个种子已完成")

    def done_indices(self):
        return {i for i, r in self.records.items() if r.status == DONE}

    def is_done(self, seed_index: int) -> bool:
        record = self.records.get(seed_index)
        return record is not None and record.status == DONE

    def get(self, seed_index: int) -> Optional[CheckpointRecord]:
        return self.records.get(seed_index)

    def mark_done(self, seed_index: int, count: int, nodes: int) -> None:
        record = CheckpointRecord(seed_index, DONE, count, nodes)
        self.records[seed_index] = record
        with open(self.path, "a", encoding="utf-8") as f:
            f.write(f"{seed_index} {DONE} {count} {nodes}\n")
            f.flush()
            os.fsync(f.fileno())
