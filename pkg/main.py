#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
命令行入口
提供枚举、校验、规范化、同构判定、不变量、拉丁方、发展、目录导入以及 API 服务器
"""

import json
import os
import platform
import sys
from datetime import datetime
from typing import Any, Callable, Dict, List, Optional

import click

from src import __version__
from src.api.services.catalogue_service import CatalogueService
from src.api.services.invariant_service import KINDS, InvariantService
from src.api.services.latin_service import LatinService
from src.api.services.p1f_service import P1FService
from src.api.services.search_service import SearchService, parse_seed_range
from src.config.settings import settings
from src.utils.logging import get_logger

logger = get_logger(__name__)


def _read(path: str) -> str:
    with open(path, "r", encoding="utf-8") as f:
        return f.read()


def _vector(values: List[int]) -> str:
    return "[" + ",".join(str(v) for v in values) + "]"


def _finish(ctx: click.Context, result: Dict[str, Any], render: Callable[[Dict[str, Any]], int]) -> None:
    """输出结果并设置退出码：失败为 1"""
    if not result["success"]:
        click.echo(f"error: {result['error']}", err=True)
        ctx.exit(1)
    if ctx.obj.get("json"):
        click.echo(json.dumps(result["data"], ensure_ascii=False, indent=2))
        ctx.exit(0)
    ctx.exit(render(result["data"]))


@click.group()
@click.version_option(__version__)
@click.option("--json", "as_json", is_flag=True, help="以 JSON 输出结果")
@click.pass_context
def cli(ctx: click.Context, as_json: bool):
    """完美1-因子分解 (P1F) 工具"""
    ctx.ensure_object(dict)
    ctx.obj["json"] = as_json


@cli.command("enumerate")
@click.option("--n", "n", type=int, required=True, help="阶数（偶数，>= 4）")
@click.option("--seeds", default=None, help="种子范围 A..B（闭区间）")
@click.option("--checkpoint", type=click.Path(dir_okay=False), default=None, help="检查点文件")
@click.option("--out", type=click.Path(dir_okay=False), required=True, help="结果文件（追加写入）")
@click.option("--workers", type=click.IntRange(min=1), default=None, help="并行进程数，默认 P1F_THREADS")
@click.option("--order", "seed_order", type=click.Choice(["natural", "shuffled"]), default="natural")
@click.option("--shuffle-seed", type=int, default=0)
@click.option("--progress/--no-progress", default=True)
@click.option("--oracle", is_flag=True, help="改用朴素枚举（只适合小阶数）")
@click.pass_context
def enumerate_command(ctx, n, seeds, checkpoint, out, workers, seed_order, shuffle_seed, progress, oracle):
    """枚举 K_n 的全部 P1F（每个同构类一个规范行）"""
    try:
        parse_seed_range(seeds)
    except ValueError as e:
        raise click.BadParameter(str(e), param_hint="--seeds")
    service = SearchService()
    if oracle:
        result = service.oracle(n, out)
    else:
        result = service.enumerate(n, out, seeds=seeds, checkpoint=checkpoint, workers=workers,
                                   seed_order=seed_order, shuffle_seed=shuffle_seed, show_progress=progress)

    def render(data):
        if oracle:
            click.echo(f"n={data['n']}: {data['classes']} classes")
            return 0
        click.echo(f"n={data['n']}: {data['p1f_count']} P1Fs from {data['seeds_run']} seeds "
                   f"({data['seeds_from_checkpoint']} from checkpoint), {data['lines']} lines in {data['out']}")
        click.echo(f"non-trivial automorphism group: {data['nontrivial_aut']}")
        for cycle_type, count in data["cycle_types"].items():
            click.echo(f"  {cycle_type}: {count}")
        return 0

    _finish(ctx, result, render)


@cli.command()
@click.argument("file", type=click.Path(exists=True, dir_okay=False))
@click.pass_context
def verify(ctx, file):
    """校验文件中的每个候选分解是否为 P1F"""
    result = P1FService().verify(_read(file))

    def render(data):
        for k, report in enumerate(data["reports"], start=1):
            if report["is_perfect"]:
                click.echo(f"{k}: perfect")
            elif not report["is_partition"]:
                click.echo(f"{k}: not a 1-factorisation (uncovered {report['uncovered_edges']}, "
                           f"multiply covered {report['multiply_covered_edges']})")
            else:
                pairs = [f"{p['factors']}:{p['cycle_lengths']}" for p in report["incompatible_pairs"]]
                click.echo(f"{k}: not perfect, incompatible pairs {' '.join(pairs)}")
        click.echo(f"perfect: {data['perfect']}/{data['total']}")
        return 0 if data["perfect"] == data["total"] else 1

    _finish(ctx, result, render)


@cli.command()
@click.argument("file", type=click.Path(exists=True, dir_okay=False))
@click.pass_context
def canon(ctx, file):
    """输出规范行与自同构群"""
    result = P1FService().canon(_read(file))

    def render(data):
        for record in data["records"]:
            click.echo(record["canonical_line"])
            click.echo(f"# |Aut| = {record['aut_order']}, generator cycle type {record['aut_cycle_type']}, "
                       f"species {record['species']}", err=True)
        return 0

    _finish(ctx, result, render)


@cli.command()
@click.argument("file1", type=click.Path(exists=True, dir_okay=False))
@click.argument("file2", type=click.Path(exists=True, dir_okay=False))
@click.pass_context
def iso(ctx, file1, file2):
    """判断两个 P1F 是否同构（同构时退出码为 0）"""
    result = P1FService().iso(_read(file1), _read(file2))

    def render(data):
        click.echo("isomorphic" if data["isomorphic"] else "not isomorphic")
        return 0 if data["isomorphic"] else 1

    _finish(ctx, result, render)


@cli.command()
@click.option("--kind", type=click.Choice(KINDS), required=True)
@click.option("--lengths", default="3,4", help="profile 统计的圈长，逗号分隔")
@click.option("--max-i", type=click.IntRange(min=0), default=None, help="p 向量的最大下标")
@click.argument("file", type=click.Path(exists=True, dir_okay=False))
@click.pass_context
def invariants(ctx, kind, lengths, max_i, file):
    """计算不变量"""
    try:
        lengths = tuple(int(x) for x in lengths.split(",") if x.strip())
    except ValueError:
        raise click.BadParameter("圈长必须是逗号分隔的整数", param_hint="--lengths")
    result = InvariantService().compute(_read(file), kind, lengths, max_i)

    def render(data):
        for record in data["records"]:
            value = record["value"]
            if kind in ("indegree", "pv", "tricolour"):
                click.echo(_vector(value))
            elif kind == "train":
                click.echo(value["hash"])
            elif kind == "cycles":
                click.echo(" ".join(f"{k}:{v}" for k, v in value.items()))
            elif kind == "profile":
                click.echo(" ".join(_vector(row) for row in value))
            else:
                click.echo(json.dumps(value, ensure_ascii=False))
        return 0

    _finish(ctx, result, render)


@cli.command()
@click.option("--fold", "fold_vertex", type=int, default=None, help="折叠的顶点（0 起始）")
@click.option("--all-folds", is_flag=True, help="折叠全部顶点")
@click.option("--check", is_flag=True, help="分类 Hamilton 性与原子性")
@click.option("--square", is_flag=True, help="输入为拉丁方文本而不是目录行")
@click.argument("file", type=click.Path(exists=True, dir_okay=False))
@click.pass_context
def latin(ctx, fold_vertex, all_folds, check, square, file):
    """折叠 P1F 得到拉丁方并分类，或直接分类一个拉丁方"""
    if square:
        result = LatinService().square(_read(file))

        def render(data):
            click.echo(f"order {data['order']}: row-Hamiltonian pairs {data['hamiltonian_row_pairs']}/{data['row_pairs']}")
            click.echo(f"row-Hamiltonian: {data['row_hamiltonian']}, column-Hamiltonian: {data['column_hamiltonian']}, "
                       f"symbol-Hamiltonian: {data['symbol_hamiltonian']}, atomic: {data['atomic']}")
            return 0

        _finish(ctx, result, render)
        return
    if (fold_vertex is None) == (not all_folds):
        raise click.UsageError("必须且只能指定 --fold J 或 --all-folds 之一")
    vertices = None if all_folds else [fold_vertex]
    result = LatinService().folds(_read(file), vertices, check=check or all_folds)

    def render(data):
        for record in data["records"]:
            if "square" in record:
                click.echo(record["square"])
            if "summary" in record:
                click.echo(record["summary"])
        return 0

    _finish(ctx, result, render)


@cli.command()
@click.argument("specfile", type=click.Path(exists=True, dir_okay=False))
@click.pass_context
def develop(ctx, specfile):
    """按规格文件发展基因子"""
    result = P1FService().develop(_read(specfile))

    def render(data):
        click.echo(data["line"])
        if data["is_perfect"]:
            click.echo(f"perfect, |Aut| = {data['aut_order']}, generator cycle type {data['aut_cycle_type']}")
            click.echo(f"canonical: {data['canonical_line']}")
            return 0
        click.echo("not perfect")
        return 1

    _finish(ctx, result, render)


@cli.command()
@click.argument("path", type=click.Path(exists=True))
@click.option("--store", type=click.Path(file_okay=False), default=None, help="存储目录，默认 P1F_CATALOGUE_DIR")
@click.option("--workers", type=click.IntRange(min=1), default=None)
@click.option("--progress/--no-progress", default=True)
@click.pass_context
def ingest(ctx, path, store, workers, progress):
    """导入目录文件（或目录下全部 *.txt）并建立不变量索引"""
    result = CatalogueService(store).ingest(path, workers=workers, show_progress=progress)

    def render(data):
        click.echo(f"total {data['total']}, valid {data['valid']}, non-trivial aut {data['nontrivial_aut']}")
        for cycle_type, count in data["cycle_types"].items():
            click.echo(f"  {cycle_type}: {count}")
        for kind, info in data["classes"].items():
            click.echo(f"{kind}: {info['classes']} classes, collisions {info['collisions']}")
        click.echo(f"species total: {data['species_total']}, atomic folds: {data['atomic_folds']}")
        if data["calibration_error"]:
            click.echo(f"calibration failure: {data['calibration_error']}")
        if data["errors"]:
            click.echo(f"errors ({len(data['errors'])}):")
            for error in data["errors"]:
                click.echo(f"  {error['source']}: {error['message']}")
        return 1 if data["errors"] or data["calibration_error"] else 0

    _finish(ctx, result, render)


def print_startup_info():
    """打印启动信息"""
    # 在调试模式下，只在主进程中打印启动信息
    if settings.debug_mode and os.environ.get('WERKZEUG_RUN_MAIN') != 'true':
        return

    logger.info("=" * 50)
    logger.info("P1F API服务器启动")
    logger.info("=" * 50)
    logger.info(f"启动时间: {datetime.now().strftime('%Y-%m-%d %H:%M:%S')}")
    logger.info(f"Python版本: {platform.python_version()}")
    logger.info(f"操作系统: {platform.platform()}")
    logger.info(f"服务器地址: http://{settings.api_host}:{settings.api_port}")
    logger.info(f"API文档地址: http://{settings.api_host}:{settings.api_port}/api/docs")
    logger.info(f"调试模式: {'开启' if settings.debug_mode else '关闭'}")
    logger.info("=" * 50)


@cli.command()
@click.option("--host", default=None, help="默认 P1F_API_HOST")
@click.option("--port", type=int, default=None, help="默认 P1F_API_PORT")
def serve(host: Optional[str], port: Optional[int]):
    """启动 API 服务器"""
    from src.api.app import create_app

    print_startup_info()
    app = create_app()
    try:
        app.run(host=host or settings.api_host, port=port or settings.api_port,
                debug=settings.debug_mode, use_reloader=False)
    except Exception as e:
        logger.error(f"服务器运行出错: {str(e)}", exc_info=True)
        raise


def main(argv: Optional[List[str]] = None) -> int:
    """主函数，返回退出码"""
    try:
        # standalone_mode=False 时 ctx.exit(code) 的退出码作为返回值
        code = cli.main(args=argv, prog_name="p1f", standalone_mode=False)
    except click.ClickException as e:
        e.show()
        return e.exit_code
    except click.Abort:
        return 1
    return code if isinstance(code, int) else 0


if __name__ == '__main__':
    sys.exit(main())
