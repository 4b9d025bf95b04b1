"""
目录存储与导入

存储目录包含两个纯文本文件：
    catalogue.txt  每行一个规范行（升序）
    index.tsv      规范行<TAB>aut=..<TAB>cycle_type=..<TAB>species=..<TAB>atomic_folds=..<TAB>不变量...

导入按行并行计算，索引在并行阶段结束后由主进程一次写出，重复导入结果相同。
"""

import os
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path
from typing import Dict, Iterator, List, Optional, Tuple, Union

from sortedcontainers import SortedDict
from tqdm import tqdm

from src.config.settings import settings
from src.core.canon import build_aut_group, canonical_line, canonicalize
from src.core.catalogue.line_codec import emit_line, parse_line
from src.core.errors import CalibrationError, P1FError
from src.core.factorisation import validate_p1f
from src.core.invariants import (
    INVARIANT_KINDS,
    ClassCount,
    InvariantReport,
    check_tricolour_calibration,
    class_counts,
    invariant_report,
)
from src.core.latin import fold_report
from src.utils.logging import get_logger

logger = get_logger(__name__)

CATALOGUE_FILE = "catalogue.txt"
INDEX_FILE = "index.tsv"


@dataclass(frozen=True)
class CatalogueRecord:
    """
    目录中的一条记录

    Attributes:
        canonical_line: 规范行
        aut_order: 自同构群阶
        aut_cycle_type: 生成元轮换型（非循环群为 non-cyclic）
        species: 折叠得到的拉丁方种类数
        atomic_folds: 每个轨道代表的折叠中原子拉丁方的个数
        invariants: 不变量报告
    """
    canonical_line: str
    aut_order: int
    aut_cycle_type: str
    species: int
    atomic_folds: int
    invariants: InvariantReport

    def format_index_line(self) -> str:
        head, _, rest = self.invariants.format_line().partition("\t")
        meta = f"aut={self.aut_order}\tcycle_type={self.aut_cycle_type}\tspecies={self.species}\tatomic_folds={self.atomic_folds}"
        return f"{head}\t{meta}\t{rest}"

    @classmethod
    def parse_index_line(cls, text: str) -> "CatalogueRecord":
        fields = text.rstrip("\n").split("\t")
        values = dict(f.split("=", 1) for f in fields[1:])
        return cls(
            canonical_line=fields[0],
            aut_order=int(values["aut"]),
            aut_cycle_type=values["cycle_type"],
            species=int(values["species"]),
            atomic_folds=int(values["atomic_folds"]),
            invariants=InvariantReport.parse_line(text),
        )

    def to_dict(self) -> Dict:
        return {
            "canonical_line": self.canonical_line,
            "aut_order": self.aut_order,
            "aut_cycle_type": self.aut_cycle_type,
            "species": self.species,
            "atomic_folds": self.atomic_folds,
            "invariants": self.invariants.to_dict(),
        }


@dataclass
class CatalogueError:
    source: str
    line: str
    message: str

    def to_dict(self) -> Dict:
        return {"source": self.source, "line": self.line, "message": self.message}


@dataclass
class CatalogueStats:
    """导入统计"""
    total: int = 0
    valid: int = 0
    errors: List[CatalogueError] = field(default_factory=list)
    aut_orders: Counter = field(default_factory=Counter)
    cycle_types: Counter = field(default_factory=Counter)
    classes: Dict[str, ClassCount] = field(default_factory=dict)
    species_total: int = 0
    atomic_folds: int = 0
    calibration_error: Optional[str] = None

    @property
    def nontrivial_aut(self) -> int:
        return sum(c for order, c in self.aut_orders.items() if order > 1)

    def to_dict(self) -> Dict:
        return {
            "total": self.total,
            "valid": self.valid,
            "nontrivial_aut": self.nontrivial_aut,
            "aut_orders": {str(k): v for k, v in sorted(self.aut_orders.items())},
            "cycle_types": dict(sorted(self.cycle_types.items())),
            "classes": {k: c.to_dict() for k, c in self.classes.items()},
            "species_total": self.species_total,
            "atomic_folds": self.atomic_folds,
            "calibration_error": self.calibration_error,
            "errors": [e.to_dict() for e in self.errors],
        }


class CatalogueStore:
    """基于目录的目录存储"""

    def __init__(self, root: Union[str, Path, None] = None):
        self.root = Path(root) if root is not None else settings.get_catalogue_path()
        self.records: SortedDict = SortedDict()
        self.load()

    @property
    def catalogue_path(self) -> Path:
        return self.root / CATALOGUE_FILE

    @property
    def index_path(self) -> Path:
        return self.root / INDEX_FILE

    def load(self) -> None:
        self.records.clear()
        if not self.index_path.exists():
            return
        with open(self.index_path, "r", encoding="utf-8") as f:
            for line in f:
                if line.strip():
                    record = CatalogueRecord.parse_index_line(line)
                    self.records[record.canonical_line] = record
        logger.info(f"已加载目录存储 {self.root}: {len(self.records)} 条记录")

    def __len__(self) -> int:
        return len(self.records)

    def __contains__(self, line: str) -> bool:
        return line in self.records

    def __iter__(self) -> Iterator[CatalogueRecord]:
        return iter(self.records.values())

    def lookup(self, line: str) -> Optional[CatalogueRecord]:
        """按规范行查找；输入行先规范化"""
        return self.records.get(canonical_line(parse_line(line)))

    def replace(self, records: List[CatalogueRecord]) -> None:
        """用给定记录重写存储（单一写入者）"""
        self.records = SortedDict((r.canonical_line, r) for r in records)
        self.root.mkdir(parents=True, exist_ok=True)
        _write_atomic(self.catalogue_path, (line for line in self.records.keys()))
        _write_atomic(self.index_path, (r.format_index_line() for r in self.records.values()))
        logger.info(f"目录存储已写入 {self.root}: {len(self.records)} 条记录")


def _write_atomic(path: Path, lines) -> None:
    tmp = path.with_suffix(path.suffix + ".tmp")
    with open(tmp, "w", encoding="utf-8") as f:
        for line in lines:
            f.write(line + "\n")
    os.replace(tmp, path)


def _expected_tokens(token: str) -> int:
    if "-" in token:
        return 2 * len(token.split(".")) - 1
    return len(token) - 1


def iter_catalogue_entries(text: str, source: str = "") -> Iterator[Tuple[str, str]]:
    """
    把目录文本切分为记录：在行边界上累积 token，直到凑满 n-1 个

    单行排版与多行排版（如三行各五个 token）得到相同的记录。

    Returns:
        Iterator[(来源位置, 记录文本)]
    """
    buffer: List[str] = []
    start = 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if not buffer:
            start = lineno
        buffer.extend(line.split())
        if len(buffer) >= _expected_tokens(buffer[0]):
            yield f"{source}:{start}", " ".join(buffer)
            buffer = []
    if buffer:
        yield f"{source}:{start}", " ".join(buffer)


def process_entry(text: str) -> Tuple[Optional[CatalogueRecord], Optional[str]]:
    """
    解析、校验、检查规范形并计算不变量

    Returns:
        (记录, None) 或 (None, 错误信息)
    """
    try:
        factorisation = parse_line(text)
        report = validate_p1f(factorisation)
        if not report.is_perfect:
            return None, f"不是 P1F: {report.to_dict()}"
        result = canonicalize(factorisation, check=False)
        line = emit_line(factorisation)
        canonical = emit_line(result.factorisation)
        if line != canonical:
            return None, f"不是规范形，规范行为 {canonical}"
        group = build_aut_group(result.automorphisms())
        orbits = group.orbits()
        folds = fold_report(factorisation, [orbit[0] for orbit in orbits])
        return CatalogueRecord(
            canonical_line=canonical,
            aut_order=group.order,
            aut_cycle_type=group.cycle_type_text,
            species=len(orbits),
            atomic_folds=folds.atomic,
            invariants=invariant_report(factorisation, canonical, settings.p_vector_max_i),
        ), None
    except P1FError as e:
        return None, str(e)


def _catalogue_files(path: Path) -> List[Path]:
    if path.is_dir():
        return sorted(path.glob("*.txt"))
    if path.is_file():
        return [path]
    raise FileNotFoundError(f"目录文件不存在: {path}")


def summarize(records: List[CatalogueRecord], stats: Optional[CatalogueStats] = None) -> CatalogueStats:
    """按记录计算统计与各不变量的类数"""
    stats = stats if stats is not None else CatalogueStats(total=len(records))
    stats.valid = len(records)
    stats.aut_orders = Counter(r.aut_order for r in records)
    stats.cycle_types = Counter(r.aut_cycle_type for r in records if r.aut_order > 1)
    stats.species_total = sum(r.species for r in records)
    stats.atomic_folds = sum(r.atomic_folds for r in records)
    reports = [r.invariants for r in records]
    stats.classes = {kind: class_counts(reports, kind) for kind in INVARIANT_KINDS}
    n = len(records[0].canonical_line.split()) + 1 if records else 0
    if n == 16:
        try:
            check_tricolour_calibration(stats.classes["tricolour"].classes, len(records))
        except CalibrationError as e:
            logger.error(str(e))
            stats.calibration_error = str(e)
    return stats


def ingest_catalogue(
    path: Union[str, Path],
    store: Optional[CatalogueStore] = None,
    workers: Optional[int] = None,
    show_progress: bool = False,
) -> CatalogueStats:
    """
    导入目录：每条记录解析、校验、检查规范形、计算不变量后写入存储

    Args:
        path: 目录文件或包含 *.txt 的目录
        store: 目标存储（默认使用配置的目录）
        workers: 并行进程数（默认 settings.threads）
        show_progress: 是否显示进度条

    Returns:
        CatalogueStats: 导入统计；无效记录列在 errors 中
    """
    store = store if store is not None else CatalogueStore()
    entries: List[Tuple[str, str]] = []
    for file in _catalogue_files(Path(path)):
        with open(file, "r", encoding="utf-8") as f:
            entries.extend(iter_catalogue_entries(f.read(), file.name))
    workers = workers or settings.threads
    logger.info(f"开始导入 {len(entries)} 条记录，workers={workers}")

    texts = [text for _, text in entries]
    if workers <= 1 or len(texts) <= 1:
        results = [process_entry(t) for t in tqdm(texts, desc="ingest", disable=not show_progress)]
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            chunksize = max(1, len(texts) // (workers * 8))
            results = list(tqdm(pool.map(process_entry, texts, chunksize=chunksize),
                                total=len(texts), desc="ingest", disable=not show_progress))

    stats = CatalogueStats(total=len(entries))
    records: Dict[str, CatalogueRecord] = {}
    for (source, text), (record, error) in zip(entries, results):
        if record is None:
            stats.errors.append(CatalogueError(source, text, error))
            logger.warning(f"{source}: {error}")
        elif record.canonical_line in records:
            stats.errors.append(CatalogueError(source, text, "重复的记录"))
            logger.warning(f"{source}: 重复的记录")
        else:
            records[record.canonical_line] = record

    ordered = [records[k] for k in sorted(records)]
    store.replace(ordered)
    summarize(ordered, stats)
    logger.info(f"导入完成: {stats.valid}/{stats.total} 条有效，{len(stats.errors)} 条错误")
    return stats
