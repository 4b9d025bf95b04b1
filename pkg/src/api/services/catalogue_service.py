from typing import Any, Dict, Optional

from src.api.services.base import service_result
from src.core.catalogue.catalogue_store import CatalogueStore, ingest_catalogue


class CatalogueService:
    """目录导入与查询"""

    def __init__(self, store_dir: Optional[str] = None):
        self.store_dir = store_dir

    @service_result
    def ingest(self, path: str, workers: Optional[int] = None, show_progress: bool = False) -> Dict[str, Any]:
        store = CatalogueStore(self.store_dir)
        stats = ingest_catalogue(path, store, workers=workers, show_progress=show_progress)
        return {"store": str(store.root), **stats.to_dict()}

    @service_result
    def lookup(self, line: str) -> Dict[str, Any]:
        record = CatalogueStore(self.store_dir).lookup(line)
        return {"found": record is not None, "record": record.to_dict() if record else None}
