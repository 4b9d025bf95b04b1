from typing import Any, Dict, List

from src.api.services.base import service_result
from src.core.canon import build_aut_group, canonicalize
from src.core.catalogue.catalogue_store import iter_catalogue_entries
from src.core.catalogue.line_codec import emit_line, parse_line
from src.core.develop import develop, parse_spec
from src.core.errors import LineParseError
from src.core.factorisation import Factorisation, validate_p1f, vertex_name


def parse_entries(text: str) -> List[Factorisation]:
    """文本中的全部目录记录（单行或多行排版）"""
    factorisations = [parse_line(entry) for _, entry in iter_catalogue_entries(text)]
    if not factorisations:
        raise LineParseError("输入中没有任何目录行")
    return factorisations


def describe_canonical(factorisation: Factorisation) -> Dict[str, Any]:
    result = canonicalize(factorisation)
    group = build_aut_group(result.automorphisms())
    n = factorisation.n
    return {
        "canonical_line": emit_line(result.factorisation),
        "relabelling": result.relabelling.to_cycle_notation(),
        "aut_order": group.order,
        "aut_cycle_type": group.cycle_type_text,
        "aut_cyclic": group.is_cyclic,
        "generators": [g.to_cycle_notation() for g in group.generators],
        "orbits": [("" if n <= 26 else ",").join(vertex_name(v, n) for v in orbit) for orbit in group.orbits()],
        "species": len(group.orbits()),
    }


class P1FService:
    """校验、规范化、同构判定与发展"""

    @service_result
    def verify(self, text: str) -> Dict[str, Any]:
        """
        校验文本中的每个候选分解

        Args:
            text: 一个或多个目录行

        Returns:
            Dict[str, Any]: 每条记录的校验报告以及完美的个数
        """
        reports = [validate_p1f(f).to_dict() for f in parse_entries(text)]
        return {
            "total": len(reports),
            "perfect": sum(1 for r in reports if r["is_perfect"]),
            "reports": reports,
        }

    @service_result
    def canon(self, text: str) -> Dict[str, Any]:
        return {"records": [describe_canonical(f) for f in parse_entries(text)]}

    @service_result
    def iso(self, text_a: str, text_b: str) -> Dict[str, Any]:
        a, b = parse_entries(text_a)[0], parse_entries(text_b)[0]
        line_a = emit_line(canonicalize(a).factorisation)
        line_b = emit_line(canonicalize(b).factorisation) if a.n == b.n else None
        return {"isomorphic": line_a == line_b, "canonical_a": line_a, "canonical_b": line_b}

    @service_result
    def develop(self, spec_text: str) -> Dict[str, Any]:
        """
        按规格发展并报告结果

        Returns:
            Dict[str, Any]: 发展得到的行、是否完美，以及（完美时）规范形与自同构群
        """
        spec = parse_spec(spec_text)
        factorisation = develop(spec)
        report = validate_p1f(factorisation)
        data = {
            "spec": spec.to_dict(),
            "line": emit_line(factorisation),
            "is_perfect": report.is_perfect,
            "generator_is_automorphism": spec.generator.fixes(factorisation),
        }
        if report.is_perfect:
            data.update(describe_canonical(factorisation))
        return data
