"""
校验、规范化、不变量与拉丁方服务测试
"""

from src.api.services.invariant_service import InvariantService
from src.api.services.latin_service import LatinService
from src.api.services.p1f_service import P1FService, parse_entries
from tests.conftest import K4_LINE, K6_LINE


def test_parse_entries_multiple_records():
    entries = parse_entries(K4_LINE + "\n" + K6_LINE + "\n")
    assert [f.n for f in entries] == [4, 6]


def test_verify_counts_perfect():
    result = P1FService().verify(K4_LINE + "\n" + K6_LINE)
    assert result["data"]["total"] == 2
    assert result["data"]["perfect"] == 2


def test_verify_empty_input():
    result = P1FService().verify("  \n# 只有注释\n")
    assert result["success"] is False
    assert result["error_type"] == "LineParseError"


def test_canon_reports_group():
    record = P1FService().canon(K6_LINE)["data"]["records"][0]
    assert record["aut_order"] == 120
    assert record["species"] == 1
    assert record["orbits"] == ["abcdef"]


def test_develop_identity_generator():
    data = P1FService().develop("perm: ()\nbase: " + K6_LINE)["data"]
    assert data["is_perfect"] is True
    assert data["generator_is_automorphism"] is True
    assert data["line"] == K6_LINE


def test_invariant_kinds():
    service = InvariantService()
    records = service.compute(K4_LINE, "tricolour")["data"]["records"]
    assert records == [{"line": K4_LINE, "value": [4]}]
    train = service.compute(K6_LINE, "train")["data"]["records"][0]["value"]
    assert train["vertices"] == 75
    assert train["loops"] == 15
    report = service.compute(K6_LINE, "all")["data"]["records"][0]["value"]
    assert report["line"] == K6_LINE
    profile = service.compute(K6_LINE, "profile", lengths=(3,))["data"]["records"][0]["value"]
    assert len(profile) == 6 and all(len(row) == 1 for row in profile)


def test_latin_all_folds():
    record = LatinService().folds(K6_LINE)["data"]["records"][0]
    assert "square" not in record
    assert record["summary"].endswith("/6, atomic: " + str(record["atomic"]))


def test_latin_square_rejects_non_latin():
    result = LatinService().square("1 2\n1 2")
    assert result["success"] is False
    assert result["error_type"] == "LatinSquareError"
