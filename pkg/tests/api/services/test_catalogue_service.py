"""
目录服务测试
"""

from src.api.services.catalogue_service import CatalogueService
from tests.conftest import relabel_line


def test_ingest_and_lookup(tmp_path, printed_lines):
    line = printed_lines["p_vector_pair_b"]
    source = tmp_path / "one.txt"
    source.write_text(line + "\n", encoding="utf-8")
    service = CatalogueService(str(tmp_path / "store"))

    result = service.ingest(str(source), workers=1)
    assert result["success"] is True
    assert result["data"]["valid"] == 1
    assert result["data"]["store"] == str(tmp_path / "store")

    found = service.lookup(relabel_line(line, [2, 0, 1] + list(range(3, 16))))
    assert found["data"]["found"] is True
    assert found["data"]["record"]["canonical_line"] == line
    assert found["data"]["record"]["invariants"]["p_vector"] == [139, 19, 15, 14, 17, 22]


def test_ingest_missing_path(tmp_path):
    result = CatalogueService(str(tmp_path / "store")).ingest(str(tmp_path / "none.txt"), workers=1)
    assert result["success"] is False
    assert result["error_type"] == "FileNotFoundError"
